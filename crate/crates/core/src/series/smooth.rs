//! Jets of the real-index continuations of the summands.

use crate::error::Result;
use crate::jet::{ln_gamma_ratio_jet, polygamma_jet, Jet1, JetArith};
use crate::special_fn::consts::{factorial, SQRT_PI};
use crate::special_fn::{gamma, zeta_int, EULER_GAMMA};

/// The identity t at t0.
pub fn var(t0: f64, order: usize) -> Jet1 {
    Jet1::variable(t0, order)
}

/// H^(m)(t + shift) continued through polygamma: ζ(m) + (-1)^(m-1)/(m-1)! ψ^(m-1)(t+shift+1).
pub fn harm(m: u32, t0: f64, shift: f64, order: usize) -> Result<Jet1> {
    let psi = polygamma_jet(m - 1, t0 + shift + 1.0, order)?.rebase(t0);
    if m == 1 {
        return Ok(psi.add_const(EULER_GAMMA));
    }
    let sign = if (m - 1).is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(psi.scale(sign / factorial(m - 1)).add_const(zeta_int(m)))
}

/// H(c t) for a positive integer scale c.
pub fn harm_scaled(c: f64, t0: f64, order: usize) -> Result<Jet1> {
    Ok(polygamma_jet(0, c * t0 + 1.0, order)?.scale_arg(c).rebase(t0).add_const(EULER_GAMMA))
}

/// (t + c)^(-s).
pub fn inv_pow(t0: f64, c: f64, s: f64, order: usize) -> Result<Jet1> {
    var(t0, order).add_const(c).powf(-s)
}

/// 1 / binom(n + t, t) = n! / ((t+1)(t+2)...(t+n)).
pub fn inv_binom(n: u64, t0: f64, order: usize) -> Result<Jet1> {
    let mut out = Jet1::constant(t0, order, factorial(n as u32));
    for i in 1..=n {
        out = out.checked_mul(&var(t0, order).add_const(i as f64).recip()?)?;
    }
    Ok(out)
}

/// Γ(t+a) / Γ(t+b) times a constant.
pub fn gamma_ratio(t0: f64, a: f64, b: f64, c: f64, order: usize) -> Result<Jet1> {
    Ok(ln_gamma_ratio_jet(t0, a, b, order)?.exp().scale(c))
}

/// binom(2t, t) / 4^t = Γ(t + 1/2) / (√π Γ(t + 1)).
pub fn central(t0: f64, order: usize) -> Result<Jet1> {
    gamma_ratio(t0, 0.5, 1.0, 1.0 / SQRT_PI, order)
}

/// (-1)^t binom(x, t) = Γ(t - x) / (Γ(-x) Γ(t + 1)) for non-integer x and t > x.
pub fn signed_binom(x: f64, t0: f64, order: usize) -> Result<Jet1> {
    gamma_ratio(t0, -x, 1.0, 1.0 / gamma(-x)?, order)
}

pub fn product(parts: &[Jet1]) -> Result<Jet1> {
    let mut it = parts.iter();
    let mut out = it.next().expect("at least one factor").clone();
    for p in it {
        out = out.checked_mul(p)?;
    }
    Ok(out)
}
