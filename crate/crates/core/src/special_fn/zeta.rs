//! Hurwitz and Riemann zeta for real s > 1.

use super::consts::{bernoulli_even, ZETA2, ZETA3, ZETA4};
use crate::compensated::CompensatedSum;
use crate::error::{Error, Result};

const EM_ORDER: usize = 12;

/// Hurwitz zeta(s, a) = sum_{j >= 0} (j + a)^(-s), for s > 1 and a > 0.
///
/// Direct summation until the shifted argument w = a + N reaches max(20, s), then the
/// Euler–Maclaurin remainder: integral, half boundary term and Bernoulli corrections.
pub fn hurwitz_zeta(s: f64, a: f64) -> Result<f64> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::domain("hurwitz_zeta", format!("s = {s} must exceed 1")));
    }
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::domain("hurwitz_zeta", format!("a = {a} must be positive")));
    }
    let target = 20.0_f64.max(s);
    let mut acc = CompensatedSum::new();
    let mut w = a;
    while w < target {
        acc.add(w.powf(-s));
        w += 1.0;
    }
    let w_s = w.powf(-s);
    acc.add(w * w_s / (s - 1.0));
    acc.add(0.5 * w_s);
    // f_k = (s)_{2k-1} / ((2k)! w^(2k-1))
    let mut f = s / (2.0 * w);
    for k in 1..=EM_ORDER {
        let term = bernoulli_even(k) * f * w_s;
        acc.add(term);
        if term.abs() < 1e-18 * acc.value().abs() {
            break;
        }
        let kk = 2.0 * k as f64;
        f *= (s + kk - 1.0) * (s + kk) / ((kk + 1.0) * (kk + 2.0) * w * w);
    }
    Ok(acc.value())
}

/// Riemann zeta(s) for s > 1.
pub fn riemann_zeta(s: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(Error::domain("riemann_zeta", format!("s = {s} must exceed 1")));
    }
    Ok(if s == 2.0 {
        ZETA2
    } else if s == 3.0 {
        ZETA3
    } else if s == 4.0 {
        ZETA4
    } else {
        1.0 + hurwitz_zeta(s, 2.0)?
    })
}

/// zeta(s) - 1 without cancellation, for s > 1.
pub fn zeta_minus_one(s: f64) -> Result<f64> {
    hurwitz_zeta(s, 2.0)
}

/// zeta(n) for integer n >= 2.
pub fn zeta_int(n: u32) -> f64 {
    riemann_zeta(n as f64).expect("zeta_int requires n >= 2")
}
