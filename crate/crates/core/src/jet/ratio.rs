use super::{jet1::ln_gamma_jet, Jet2, JetArith};
use crate::error::{Error, Result};
use crate::special_fn::consts::{binomial_int, factorial};
use crate::special_fn::is_nonpositive_integer;

pub const MAX_OX: usize = 3;
pub const MAX_OZ: usize = 12;

/// The two gamma ratios whose derivatives build the closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RatioVariant {
    /// Γ(x+1) Γ(z) / Γ(x+z)
    BetaShift0,
    /// Γ(x+1) Γ(z) / Γ(x+z+1)
    BetaShift1,
}

impl RatioVariant {
    fn shift(self) -> f64 {
        match self {
            RatioVariant::BetaShift0 => 0.0,
            RatioVariant::BetaShift1 => 1.0,
        }
    }

    /// Scalar value of the ratio, for cross-checks.
    pub fn eval(self, x: f64, z: f64) -> Result<f64> {
        use crate::special_fn::gamma;
        Ok(gamma(x + 1.0)? * gamma(z)? / gamma(x + z + self.shift())?)
    }
}

/// Bivariate jet of the ratio at `(x0, z0)` with orders `(ox, oz)`.
pub fn gamma_ratio_jet(variant: RatioVariant, x0: f64, z0: f64, ox: usize, oz: usize) -> Result<Jet2> {
    if ox > MAX_OX || oz > MAX_OZ {
        return Err(Error::OrderOutOfRange { a: ox, b: oz, ox: MAX_OX, oz: MAX_OZ });
    }
    let w0 = x0 + z0 + variant.shift();
    for (at, arg) in [(x0 + 1.0, "x+1"), (z0, "z"), (w0, "x+z")] {
        if is_nonpositive_integer(at) {
            return Err(Error::Pole { func: "gamma_ratio_jet", at });
        }
        if !(at > 0.0) {
            return Err(Error::domain(
                "gamma_ratio_jet",
                format!("gamma argument {arg} = {at} must be positive"),
            ));
        }
    }
    let lx = ln_gamma_jet(x0 + 1.0, ox)?;
    let lz = ln_gamma_jet(z0, oz)?;
    let lw = ln_gamma_jet(w0, ox + oz)?;
    let mut l = Jet2::zeros((x0, z0), (ox, oz));
    for a in 0..=ox {
        for b in 0..=oz {
            // (dx + dz)^(a+b) contributes C(a+b, a) dx^a dz^b
            let mut v = -lw.coeffs()[a + b] * binomial_int((a + b) as u32, a as u32);
            if b == 0 {
                v += lx.coeffs()[a];
            }
            if a == 0 {
                v += lz.coeffs()[b];
            }
            l.set(a, b, v);
        }
    }
    Ok(l.exp())
}

/// `∂x^a ∂z^b` of the jet's function at its base point.
pub fn mixed_partial(j: &Jet2, a: usize, b: usize) -> Result<f64> {
    let (ox, oz) = j.orders();
    if a > ox || b > oz {
        return Err(Error::OrderOutOfRange { a, b, ox, oz });
    }
    Ok(factorial(a as u32) * factorial(b as u32) * j.coeff(a, b))
}
