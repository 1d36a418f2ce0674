//! Scalar special functions: gamma family, zeta, harmonic numbers and combinatorial helpers.

pub mod consts;
mod gamma;
mod harmonic;
mod zeta;

pub use consts::{EULER_GAMMA, ZETA2, ZETA3, ZETA4};
pub use gamma::{
    cos_pi, digamma, gamma, is_nonpositive_integer, ln_gamma, ln_gamma_ratio, ln_gamma_signed, polygamma,
    sin_pi,
};
pub use harmonic::{extended_harmonic, gen_harmonic, harmonic, HarmonicCache};
pub use zeta::{hurwitz_zeta, riemann_zeta, zeta_int, zeta_minus_one};

use crate::error::{Error, Result};

/// Generalized binomial coefficient Gamma(s+1) / (Gamma(t+1) Gamma(s-t+1)).
///
/// Exactly zero when a denominator gamma sits on a pole and the numerator does not.
pub fn gen_binom(s: f64, t: f64) -> Result<f64> {
    if is_nonpositive_integer(s + 1.0) {
        return Err(Error::Pole { func: "gen_binom", at: s });
    }
    if is_nonpositive_integer(t + 1.0) || is_nonpositive_integer(s - t + 1.0) {
        return Ok(0.0);
    }
    if t == t.floor() && t <= 170.0 {
        let k = t as u32;
        return Ok((0..k).fold(1.0, |acc, i| acc * (s - i as f64) / (i + 1) as f64));
    }
    let (ln_num, sn) = ln_gamma_signed(s + 1.0)?;
    let (ln_d1, s1) = ln_gamma_signed(t + 1.0)?;
    let (ln_d2, s2) = ln_gamma_signed(s - t + 1.0)?;
    Ok(sn * s1 * s2 * (ln_num - ln_d1 - ln_d2).exp())
}

/// Beta function B(mu, nu) for positive arguments.
pub fn beta(mu: f64, nu: f64) -> Result<f64> {
    if !(mu > 0.0 && nu > 0.0) {
        return Err(Error::domain("beta", format!("({mu}, {nu}) must be positive")));
    }
    Ok((ln_gamma(mu)? + ln_gamma(nu)? - ln_gamma(mu + nu)?).exp())
}

/// Falling factorial lambda (lambda - 1) ... (lambda - l + 1); 1 for l = 0.
pub fn falling_factorial(lambda: f64, l: u32) -> f64 {
    (0..l).fold(1.0, |acc, i| acc * (lambda - i as f64))
}

/// Laurent coefficient (-1)^n zeta(n) + H_k^(n) of psi about z = -k.
pub fn laurent_alpha(n: u32, k: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::domain("laurent_alpha", format!("n = {n} must be >= 2")));
    }
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(sign * zeta_int(n) + gen_harmonic(k, n))
}
