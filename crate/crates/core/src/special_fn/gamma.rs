//! Gamma, log-gamma, digamma and polygamma on the real line.

use super::consts::{bernoulli_even, factorial, EULER_GAMMA, LN_PI, LN_SQRT_2PI};
use crate::compensated::CompensatedSum;
use crate::error::{Error, Result};
use std::f64::consts::PI;

const STIRLING_MIN: f64 = 10.0;

/// True when `x` is 0, -1, -2, ...
#[inline]
pub fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// sin(pi x) with exact argument reduction.
pub fn sin_pi(x: f64) -> f64 {
    let mut r = x % 2.0;
    if r > 1.0 {
        r -= 2.0;
    } else if r < -1.0 {
        r += 2.0;
    }
    if r > 0.5 {
        r = 1.0 - r;
    } else if r < -0.5 {
        r = -1.0 - r;
    }
    if r == 0.0 {
        return 0.0;
    }
    (PI * r).sin()
}

/// cos(pi x) with exact argument reduction.
pub fn cos_pi(x: f64) -> f64 {
    let mut r = (x % 2.0).abs();
    if r > 1.0 {
        r = 2.0 - r;
    }
    if r == 0.5 {
        0.0
    } else if r <= 0.25 {
        (PI * r).cos()
    } else if r <= 0.75 {
        (PI * (0.5 - r)).sin()
    } else {
        -(PI * (1.0 - r)).cos()
    }
}

fn stirling_ln_gamma(y: f64) -> f64 {
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut pow = inv;
    let mut corr = 0.0;
    for k in 1..=9 {
        let kk = 2.0 * k as f64;
        corr += bernoulli_even(k) / (kk * (kk - 1.0)) * pow;
        pow *= inv2;
    }
    (y - 0.5) * y.ln() - y + LN_SQRT_2PI + corr
}

/// Natural log of Gamma(x) for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("ln_gamma", format!("x = {x} must be positive")));
    }
    if x == x.floor() && x <= 23.0 {
        return Ok(factorial(x as u32 - 1).ln());
    }
    if x >= STIRLING_MIN {
        return Ok(stirling_ln_gamma(x));
    }
    let mut y = x;
    let mut prod = 1.0;
    while y < STIRLING_MIN {
        prod *= y;
        y += 1.0;
    }
    Ok(stirling_ln_gamma(y) - prod.ln())
}

/// ln|Gamma(x)| and the sign of Gamma(x) for any non-pole real x.
pub fn ln_gamma_signed(x: f64) -> Result<(f64, f64)> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole { func: "gamma", at: x });
    }
    if x > 0.0 {
        return Ok((ln_gamma(x)?, 1.0));
    }
    // Gamma(x) Gamma(1-x) = pi / sin(pi x)
    let s = sin_pi(x);
    let lg = LN_PI - s.abs().ln() - ln_gamma(1.0 - x)?;
    Ok((lg, s.signum()))
}

/// Gamma(x) for real x off the poles 0, -1, -2, ...
pub fn gamma(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole { func: "gamma", at: x });
    }
    if !x.is_finite() {
        return Err(Error::domain("gamma", format!("x = {x}")));
    }
    if x < 0.5 {
        return Ok(PI / (sin_pi(x) * gamma(1.0 - x)?));
    }
    if x == x.floor() && x <= 171.0 {
        return Ok(factorial(x as u32 - 1));
    }
    if x >= STIRLING_MIN {
        return Ok(stirling_ln_gamma(x).exp());
    }
    let mut y = x;
    let mut prod = 1.0;
    while y < STIRLING_MIN {
        prod *= y;
        y += 1.0;
    }
    Ok(stirling_ln_gamma(y).exp() / prod)
}

/// ln Gamma(x + a) - ln Gamma(x + b) for x + a, x + b > 0, stable for large x.
pub fn ln_gamma_ratio(x: f64, a: f64, b: f64) -> Result<f64> {
    let (za, zb) = (x + a, x + b);
    if !(za > 0.0 && zb > 0.0) {
        return Err(Error::domain("ln_gamma_ratio", format!("arguments {za}, {zb} must be positive")));
    }
    if a == b {
        return Ok(0.0);
    }
    let spread = a.abs().max(b.abs());
    if x < 1e3 || x < 100.0 * spread {
        return Ok(ln_gamma(za)? - ln_gamma(zb)?);
    }
    // Stirling difference with ln(x + c) = ln x + ln1p(c / x) expanded term by term.
    let lead = (a - b) * x.ln() + (za - 0.5) * (a / x).ln_1p() - (zb - 0.5) * (b / x).ln_1p() - (a - b);
    let mut corr = 0.0;
    for k in 1..=6 {
        let kk = 2.0 * k as f64;
        let p = kk - 1.0;
        corr += bernoulli_even(k) / (kk * p) * (za.powf(-p) - zb.powf(-p));
    }
    Ok(lead + corr)
}

fn digamma_asymptotic(y: f64) -> f64 {
    let inv2 = 1.0 / (y * y);
    let mut pow = inv2;
    let mut s = 0.0;
    for k in 1..=8 {
        s += bernoulli_even(k) / (2.0 * k as f64) * pow;
        pow *= inv2;
    }
    y.ln() - 0.5 / y - s
}

/// Digamma psi(x) = d/dx ln Gamma(x), for x off the poles.
pub fn digamma(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole { func: "digamma", at: x });
    }
    if !x.is_finite() {
        return Err(Error::domain("digamma", format!("x = {x}")));
    }
    if x < 0.0 {
        // psi(x) = psi(1 - x) - pi cot(pi x)
        return Ok(digamma(1.0 - x)? - PI * cos_pi(x) / sin_pi(x));
    }
    if x == 1.0 {
        return Ok(-EULER_GAMMA);
    }
    let mut y = x;
    let mut shift = CompensatedSum::new();
    while y < STIRLING_MIN {
        shift.add(1.0 / y);
        y += 1.0;
    }
    Ok(digamma_asymptotic(y) - shift.value())
}

fn polygamma_threshold(k: u32) -> f64 {
    STIRLING_MIN.max(1.5 * k as f64 + 4.0)
}

/// Asymptotic series for psi^(k)(y), k >= 1, y large.
fn polygamma_asymptotic(k: u32, y: f64) -> f64 {
    let kf = k as f64;
    let lead = factorial(k - 1) / y.powi(k as i32);
    let mut acc = CompensatedSum::new();
    acc.add(lead);
    acc.add(lead * kf / (2.0 * y));
    // u_j = (2j + k - 1)! / ((2j)! y^(2j + k)), starting at j = 1
    let mut u = lead * kf * (kf + 1.0) / (2.0 * y * y);
    let mut prev = f64::INFINITY;
    for j in 1..=15usize {
        let term = bernoulli_even(j) * u;
        if term.abs() > prev {
            break;
        }
        acc.add(term);
        if term.abs() <= 1e-17 * acc.value().abs() {
            break;
        }
        prev = term.abs();
        let jj = 2.0 * j as f64;
        u *= (jj + kf) * (jj + kf + 1.0) / ((jj + 1.0) * (jj + 2.0) * y * y);
    }
    let v = acc.value();
    if k % 2 == 1 {
        v
    } else {
        -v
    }
}

/// Polygamma psi^(k)(x) for k >= 0.
///
/// For k >= 1 the argument is shifted up with psi^(k)(x+1) = psi^(k)(x) + (-1)^k k!/x^(k+1)
/// until it clears a k-dependent threshold, then the Bernoulli asymptotic series is summed.
/// Negative non-integer arguments are reached by the same shift.
pub fn polygamma(k: u32, x: f64) -> Result<f64> {
    if k == 0 {
        return digamma(x);
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole { func: "polygamma", at: x });
    }
    if !x.is_finite() {
        return Err(Error::domain("polygamma", format!("x = {x}")));
    }
    let threshold = polygamma_threshold(k);
    let mut y = x;
    let mut shift = CompensatedSum::new();
    let p = -(k as i32 + 1);
    while y < threshold {
        shift.add(y.powi(p));
        y += 1.0;
    }
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let kfact = factorial(k);
    // psi^(k)(x) = psi^(k)(y) - (-1)^k k! sum 1/(x+j)^(k+1)
    Ok(polygamma_asymptotic(k, y) - sign * kfact * shift.value())
}
