use super::{cauchy, exp_series, JetArith};
use crate::error::{Error, Result};
use crate::special_fn::{consts::factorial, ln_gamma, ln_gamma_ratio, polygamma};

/// Univariate jet: `coeffs[k] = f^(k)(base) / k!` for `k = 0..=order`.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet1 {
    base: f64,
    coeffs: Vec<f64>,
}

impl Jet1 {
    /// Panics if `coeffs` is empty.
    pub fn new(base: f64, coeffs: Vec<f64>) -> Self {
        assert!(!coeffs.is_empty(), "a jet needs at least one coefficient");
        Jet1 { base, coeffs }
    }

    pub fn constant(base: f64, order: usize, value: f64) -> Self {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = value;
        Jet1 { base, coeffs }
    }

    /// The identity function t at `base`.
    pub fn variable(base: f64, order: usize) -> Self {
        let mut j = Self::constant(base, order, base);
        if order > 0 {
            j.coeffs[1] = 1.0;
        }
        j
    }

    pub fn base(&self) -> f64 {
        self.base
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn value(&self) -> f64 {
        self.coeffs[0]
    }

    /// k-th derivative at the base point; zero beyond the order.
    pub fn derivative(&self, k: usize) -> f64 {
        self.coeffs.get(k).map_or(0.0, |c| c * factorial(k as u32))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.base != other.base || self.order() != other.order() {
            return Err(Error::JetMismatch(format!(
                "base {} order {} vs base {} order {}",
                self.base,
                self.order(),
                other.base,
                other.order()
            )));
        }
        Ok(())
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.negate())
    }

    pub fn scale(&self, c: f64) -> Self {
        self.map(|x| c * x)
    }

    pub fn add_const(&self, c: f64) -> Self {
        let mut j = self.clone();
        j.coeffs[0] += c;
        j
    }

    /// Reciprocal by series division; errors on a zero value.
    pub fn recip(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0 == 0.0 || !a0.is_finite() {
            return Err(Error::domain("Jet1::recip", format!("value {a0}")));
        }
        let n = self.coeffs.len();
        let mut b = vec![0.0; n];
        b[0] = 1.0 / a0;
        for k in 1..n {
            let s: f64 = (1..=k).map(|i| self.coeffs[i] * b[k - i]).sum();
            b[k] = -s / a0;
        }
        Ok(Jet1 { base: self.base, coeffs: b })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.recip()?)
    }

    /// Natural log; the value must be positive.
    pub fn ln(&self) -> Result<Self> {
        let a = &self.coeffs;
        if !(a[0] > 0.0) {
            return Err(Error::domain("Jet1::ln", format!("value {} not positive", a[0])));
        }
        let n = a.len();
        let mut l = vec![0.0; n];
        l[0] = a[0].ln();
        for k in 1..n {
            let s: f64 = (1..k).map(|i| i as f64 * l[i] * a[k - i]).sum();
            l[k] = (a[k] - s / k as f64) / a[0];
        }
        Ok(Jet1 { base: self.base, coeffs: l })
    }

    /// Real power of a positive jet.
    pub fn powf(&self, s: f64) -> Result<Self> {
        Ok(self.ln()?.scale(s).exp())
    }

    /// Substitute t -> c t in the increment: coefficient k picks up c^k.
    pub fn scale_arg(&self, c: f64) -> Self {
        let mut p = 1.0;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&x| {
                let y = x * p;
                p *= c;
                y
            })
            .collect();
        Jet1 { base: self.base, coeffs }
    }

    /// Relabel the base point without changing coefficients.
    pub fn rebase(&self, base: f64) -> Self {
        Jet1 { base, coeffs: self.coeffs.clone() }
    }

    fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        Jet1 { base: self.base, coeffs: self.coeffs.iter().map(|&x| f(x)).collect() }
    }
}

impl JetArith for Jet1 {
    fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Jet1 { base: self.base, coeffs })
    }

    fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Jet1 { base: self.base, coeffs: cauchy(&self.coeffs, &other.coeffs) })
    }

    fn negate(&self) -> Self {
        self.map(|x| -x)
    }

    fn exp(&self) -> Self {
        Jet1 { base: self.base, coeffs: exp_series(&self.coeffs) }
    }
}

/// Jet of ln Gamma at `a > 0`: `[lnΓ(a), ψ(a), ψ'(a)/2!, ..., ψ^(order-1)(a)/order!]`.
pub fn ln_gamma_jet(a: f64, order: usize) -> Result<Jet1> {
    if !(a > 0.0) {
        return Err(Error::domain("ln_gamma_jet", format!("a = {a} must be positive")));
    }
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(ln_gamma(a)?);
    for k in 1..=order {
        coeffs.push(polygamma(k as u32 - 1, a)? / factorial(k as u32));
    }
    Ok(Jet1 { base: a, coeffs })
}

/// Jet of ψ^(k) at `a`: coefficient i is ψ^(k+i)(a) / i!.
pub fn polygamma_jet(k: u32, a: f64, order: usize) -> Result<Jet1> {
    let coeffs =
        (0..=order as u32).map(|i| Ok(polygamma(k + i, a)? / factorial(i))).collect::<Result<Vec<_>>>()?;
    Ok(Jet1 { base: a, coeffs })
}

/// Jet of ln Γ(t+a) − ln Γ(t+b) at `t0`, with the value taken from the stable difference.
pub fn ln_gamma_ratio_jet(t0: f64, a: f64, b: f64, order: usize) -> Result<Jet1> {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(ln_gamma_ratio(t0, a, b)?);
    for k in 1..=order {
        let d = polygamma(k as u32 - 1, t0 + a)? - polygamma(k as u32 - 1, t0 + b)?;
        coeffs.push(d / factorial(k as u32));
    }
    Ok(Jet1 { base: t0, coeffs })
}
