use super::{cauchy, exp_series, JetArith};
use crate::error::{Error, Result};

/// Bivariate jet: `coeff(a, b) = ∂x^a ∂z^b f(x0, z0) / (a! b!)`, box-truncated.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet2 {
    base: (f64, f64),
    orders: (usize, usize),
    coeffs: Vec<f64>,
}

impl Jet2 {
    pub fn zeros(base: (f64, f64), orders: (usize, usize)) -> Self {
        Jet2 { base, orders, coeffs: vec![0.0; (orders.0 + 1) * (orders.1 + 1)] }
    }

    pub fn constant(base: (f64, f64), orders: (usize, usize), value: f64) -> Self {
        let mut j = Self::zeros(base, orders);
        j.coeffs[0] = value;
        j
    }

    /// Panics if `coeffs` is not `(ox+1) x (oz+1)`.
    pub fn from_rows(base: (f64, f64), rows: Vec<Vec<f64>>) -> Self {
        let ox = rows.len() - 1;
        let oz = rows[0].len() - 1;
        assert!(rows.iter().all(|r| r.len() == oz + 1), "rows must be rectangular");
        Jet2 { base, orders: (ox, oz), coeffs: rows.concat() }
    }

    pub fn base(&self) -> (f64, f64) {
        self.base
    }

    pub fn orders(&self) -> (usize, usize) {
        self.orders
    }

    pub fn coeff(&self, a: usize, b: usize) -> f64 {
        self.coeffs[self.idx(a, b)]
    }

    pub(crate) fn set(&mut self, a: usize, b: usize, v: f64) {
        let i = self.idx(a, b);
        self.coeffs[i] = v;
    }

    /// Row `a`: the z-series of the x^a coefficient.
    pub fn row(&self, a: usize) -> &[f64] {
        let w = self.orders.1 + 1;
        &self.coeffs[a * w..(a + 1) * w]
    }

    fn idx(&self, a: usize, b: usize) -> usize {
        assert!(a <= self.orders.0 && b <= self.orders.1, "jet index out of range");
        a * (self.orders.1 + 1) + b
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.base != other.base || self.orders != other.orders {
            return Err(Error::JetMismatch(format!(
                "base {:?} orders {:?} vs base {:?} orders {:?}",
                self.base, self.orders, other.base, other.orders
            )));
        }
        Ok(())
    }

    pub fn scale(&self, c: f64) -> Self {
        let mut j = self.clone();
        j.coeffs.iter_mut().for_each(|x| *x *= c);
        j
    }
}

impl JetArith for Jet2 {
    fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut j = self.clone();
        j.coeffs.iter_mut().zip(&other.coeffs).for_each(|(a, b)| *a += b);
        Ok(j)
    }

    fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let (ox, oz) = self.orders;
        let mut out = Self::zeros(self.base, self.orders);
        for a in 0..=ox {
            let mut acc = vec![0.0; oz + 1];
            for i in 0..=a {
                let p = cauchy(self.row(i), other.row(a - i));
                acc.iter_mut().zip(p).for_each(|(s, v)| *s += v);
            }
            for (b, v) in acc.into_iter().enumerate() {
                out.set(a, b, v);
            }
        }
        Ok(out)
    }

    fn negate(&self) -> Self {
        self.scale(-1.0)
    }

    /// Row recurrence from ∂x e = e ∂x l: a E_a = sum_i i L_i E_{a-i} with z-series products.
    fn exp(&self) -> Self {
        let (ox, oz) = self.orders;
        let mut out = Self::zeros(self.base, self.orders);
        let mut rows: Vec<Vec<f64>> = vec![exp_series(self.row(0))];
        for a in 1..=ox {
            let mut acc = vec![0.0; oz + 1];
            for i in 1..=a {
                let p = cauchy(self.row(i), &rows[a - i]);
                acc.iter_mut().zip(p).for_each(|(s, v)| *s += i as f64 * v);
            }
            acc.iter_mut().for_each(|s| *s /= a as f64);
            rows.push(acc);
        }
        for (a, r) in rows.into_iter().enumerate() {
            for (b, v) in r.into_iter().enumerate() {
                out.set(a, b, v);
            }
        }
        out
    }
}
