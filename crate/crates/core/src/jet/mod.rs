//! Truncated Taylor series (jets) and the gamma-ratio jets used by the closed forms.

mod jet1;
mod jet2;
mod ratio;

pub use jet1::{ln_gamma_jet, ln_gamma_ratio_jet, polygamma_jet, Jet1};
pub use jet2::Jet2;
pub use ratio::{gamma_ratio_jet, mixed_partial, RatioVariant, MAX_OX, MAX_OZ};

use crate::error::Result;

/// Arithmetic shared by univariate and bivariate jets.
pub trait JetArith: Sized {
    fn checked_add(&self, other: &Self) -> Result<Self>;
    fn checked_mul(&self, other: &Self) -> Result<Self>;
    fn negate(&self) -> Self;
    fn exp(&self) -> Self;
}

pub fn jet_add<J: JetArith>(a: &J, b: &J) -> Result<J> {
    a.checked_add(b)
}

pub fn jet_mul<J: JetArith>(a: &J, b: &J) -> Result<J> {
    a.checked_mul(b)
}

pub fn jet_neg<J: JetArith>(a: &J) -> J {
    a.negate()
}

pub fn jet_exp<J: JetArith>(a: &J) -> J {
    a.exp()
}

/// Truncated product of two coefficient slices of equal length.
pub(crate) fn cauchy(a: &[f64], b: &[f64]) -> Vec<f64> {
    let n = a.len();
    (0..n).map(|k| (0..=k).map(|i| a[i] * b[k - i]).sum()).collect()
}

/// Coefficients of exp(l) from those of l, by k e_k = sum_i i l_i e_{k-i}.
pub(crate) fn exp_series(l: &[f64]) -> Vec<f64> {
    let n = l.len();
    let mut e = vec![0.0; n];
    if n == 0 {
        return e;
    }
    e[0] = l[0].exp();
    for k in 1..n {
        let s: f64 = (1..=k).map(|i| i as f64 * l[i] * e[k - i]).sum();
        e[k] = s / k as f64;
    }
    e
}
