//! Direct summation oracles for the left-hand sides, with Euler–Maclaurin tails.

mod families;
mod quad;
mod smooth;

pub use families::*;
pub use quad::integrate_tail;

use crate::compensated::CompensatedSum;
use crate::error::{Error, Result};
use crate::jet::Jet1;
use crate::special_fn::consts::bernoulli_even;

/// Tolerances and truncation limits for the oracles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    pub rel_tol: f64,
    pub max_terms: u64,
    /// Number of Bernoulli corrections in the tail.
    pub em_order: usize,
    pub consecutive_small: u32,
    /// Index K after which the tail is replaced by its Euler–Maclaurin estimate.
    pub em_start: u64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            rel_tol: 1e-10,
            max_terms: 100_000_000,
            em_order: 6,
            consecutive_small: 3,
            em_start: 10_000,
        }
    }
}

impl EvalConfig {
    pub fn with_rel_tol(self, rel_tol: f64) -> Self {
        EvalConfig { rel_tol, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::domain("EvalConfig", format!("rel_tol = {}", self.rel_tol)));
        }
        if self.max_terms < 1 || self.em_start < 1 {
            return Err(Error::domain("EvalConfig", "max_terms and em_start must be >= 1"));
        }
        if self.em_order == 0 || self.em_order > 15 {
            return Err(Error::domain("EvalConfig", "em_order must lie in 1..=15"));
        }
        Ok(())
    }
}

/// A summed series with its estimated remaining error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumResult {
    pub value: f64,
    pub tail_estimate: f64,
    pub terms_used: u64,
    pub converged: bool,
}

impl SumResult {
    fn new(value: f64, tail_estimate: f64, terms_used: u64, cfg: &EvalConfig) -> Self {
        let converged = tail_estimate <= cfg.rel_tol * value.abs().max(1.0);
        SumResult { value, tail_estimate, terms_used, converged }
    }

    pub(crate) fn exact(value: f64, terms_used: u64) -> Self {
        SumResult { value, tail_estimate: 0.0, terms_used, converged: true }
    }

    /// Multiply value and tail estimate by a constant.
    pub fn scaled(self, c: f64) -> Self {
        SumResult { value: c * self.value, tail_estimate: c.abs() * self.tail_estimate, ..self }
    }
}

fn check_term(index: u64, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFiniteTerm { index, value })
    }
}

/// Sum `term(k)` for k = `k_start`, `k_start`+1, ... until the terms and a ratio-based
/// tail bound both fall under `rel_tol` relative to the partial sum.
pub fn sum_adaptive(mut term: impl FnMut(u64) -> f64, k_start: u64, cfg: &EvalConfig) -> Result<SumResult> {
    cfg.validate()?;
    let mut acc = CompensatedSum::new();
    let mut small = 0u32;
    let mut prev = f64::NAN;
    let mut tail = f64::INFINITY;
    let mut used = 0u64;
    for k in k_start.. {
        if used >= cfg.max_terms {
            break;
        }
        let t = check_term(k, term(k))?;
        acc.add(t);
        used += 1;
        let partial = acc.value().abs();
        tail = ratio_tail(prev, t, k);
        prev = t;
        if t.abs() <= cfg.rel_tol * partial {
            small += 1;
        } else {
            small = 0;
        }
        if small >= cfg.consecutive_small && tail <= cfg.rel_tol * partial {
            break;
        }
    }
    let value = acc.value();
    Ok(SumResult::new(value, tail, used, cfg))
}

/// Tail after term k from the local decay: geometric and power-law decay both give
/// t_k k / (k (1/r - 1) - 1) with r = t_k / t_{k-1}.
fn ratio_tail(prev: f64, t: f64, k: u64) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    let r = (t / prev).abs();
    if !(r < 1.0) {
        return f64::INFINITY;
    }
    let k = k.max(1) as f64;
    let d = k * (1.0 / r - 1.0) - 1.0;
    if d <= 0.0 {
        f64::INFINITY
    } else {
        t.abs() * k / d
    }
}

/// Euler–Maclaurin estimate of a tail with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tail {
    pub value: f64,
    pub error: f64,
}

/// Estimate Σ_{k>K} f(k) for a smooth `f` given as `f(t0, order)` → jet at t0.
///
/// Integral from K to ∞, minus half of f(K), minus Bernoulli-weighted odd derivatives at K.
pub fn em_tail(f: &dyn Fn(f64, usize) -> Result<Jet1>, k: u64, cfg: &EvalConfig) -> Result<Tail> {
    cfg.validate()?;
    let kf = k as f64;
    let order = 2 * cfg.em_order - 1;
    let jet = f(kf, order)?;
    let c = jet.coeffs();
    let f0 = check_term(k, c[0])?;
    let mut prev = f0.abs();
    for s in [2.0, 4.0, 16.0] {
        let v = f(s * kf, 0)?.value().abs();
        if v > prev {
            return Err(Error::NonMonotoneTail { at: s * kf });
        }
        prev = v;
    }
    let scalar = |t: f64| -> Result<f64> { Ok(f(t, 0)?.value()) };
    let (integral, quad_err) = quad::integrate_tail(&scalar, kf)?;
    let mut value = CompensatedSum::new();
    value.add(integral);
    value.add(-0.5 * f0);
    let mut last = 0.0;
    for j in 1..=cfg.em_order {
        last = bernoulli_even(j) / (2 * j) as f64 * c[2 * j - 1];
        value.add(-last);
    }
    let value = value.value();
    if !value.is_finite() {
        return Err(Error::NonFiniteTerm { index: k, value });
    }
    Ok(Tail { value, error: last.abs() + quad_err })
}

/// Direct terms k0..=K, then the Euler–Maclaurin tail of the smooth continuation.
pub(crate) fn sum_with_tail(
    k0: u64,
    mut direct: impl FnMut(u64) -> f64,
    smooth: &dyn Fn(f64, usize) -> Result<Jet1>,
    cfg: &EvalConfig,
) -> Result<SumResult> {
    cfg.validate()?;
    let k_end = cfg.em_start.max(k0 + 1);
    let mut acc = CompensatedSum::new();
    for k in k0..=k_end {
        acc.add(check_term(k, direct(k))?);
    }
    let tail = em_tail(smooth, k_end, cfg)?;
    acc.add(tail.value);
    let value = acc.value();
    let terms = k_end - k0 + 1;
    let roundoff = 8.0 * f64::EPSILON * value.abs();
    Ok(SumResult::new(value, tail.error + roundoff, terms, cfg))
}

/// Sum of finitely many terms k0..=k_last.
pub(crate) fn sum_finite(k0: u64, k_last: u64, mut direct: impl FnMut(u64) -> f64) -> Result<SumResult> {
    let mut acc = CompensatedSum::new();
    for k in k0..=k_last {
        acc.add(check_term(k, direct(k))?);
    }
    Ok(SumResult::exact(acc.value(), k_last.saturating_sub(k0) + 1))
}
