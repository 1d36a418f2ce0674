//! Gauss–Legendre panels on [0, ∞) after the substitution t = K e^u.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::compensated::CompensatedSum;
use crate::error::Result;

/// Nodes and weights on [-1, 1] by Newton iteration on P_n.
fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    (0..n)
        .map(|i| {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            (x, 2.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect()
}

fn rule(n: usize) -> &'static [(f64, f64)] {
    static R15: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    static R10: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    match n {
        15 => R15.get_or_init(|| gauss_legendre(15)),
        _ => R10.get_or_init(|| gauss_legendre(10)),
    }
}

fn panel(g: &dyn Fn(f64) -> Result<f64>, a: f64, b: f64, n: usize) -> Result<f64> {
    let (c, h) = (0.5 * (a + b), 0.5 * (b - a));
    let mut s = 0.0;
    for &(x, w) in rule(n) {
        s += w * g(c + h * x)?;
    }
    Ok(s * h)
}

/// Panel cap in u; beyond it K e^u exceeds any tail that still matters.
const U_MAX: f64 = 600.0;

/// ∫_K^∞ f(t) dt with an error estimate from the 10-point companion rule.
pub fn integrate_tail(f: &dyn Fn(f64) -> Result<f64>, k: f64) -> Result<(f64, f64)> {
    let g = |u: f64| -> Result<f64> {
        let t = k * u.exp();
        Ok(f(t)? * t)
    };
    let mut total = CompensatedSum::new();
    let mut err = 0.0;
    let mut small = 0;
    let mut u = 0.0;
    while u < U_MAX {
        let hi = panel(&g, u, u + 1.0, 15)?;
        let lo = panel(&g, u, u + 1.0, 10)?;
        total.add(hi);
        err += (hi - lo).abs();
        u += 1.0;
        if hi.abs() <= 1e-18 * total.value().abs() {
            small += 1;
            if small >= 3 {
                break;
            }
        } else {
            small = 0;
        }
    }
    Ok((total.value(), err))
}
