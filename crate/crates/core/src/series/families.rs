//! The left-hand-side series, each as direct terms plus a smooth continuation for the tail.

use super::smooth::{central, harm, harm_scaled, inv_binom, inv_pow, product, signed_binom};
use super::{sum_finite, sum_with_tail, EvalConfig, SumResult};
use crate::compensated::CompensatedSum;
use crate::error::{Error, Result};
use crate::jet::{Jet1, JetArith};
use crate::special_fn::HarmonicCache;

fn cache(cfg: &EvalConfig, factor: u64) -> HarmonicCache {
    HarmonicCache::new(((cfg.em_start + 2) * factor) as usize)
}

fn sign(n: u64) -> f64 {
    if n.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn is_nonneg_integer(x: f64) -> bool {
    x >= 0.0 && x == x.floor()
}

/// binom(n+k, k) advanced one k at a time by the factor (n+k)/k.
struct BinomRun {
    n: u64,
    next_k: u64,
    value: f64,
}

impl BinomRun {
    fn new(n: u64) -> Self {
        BinomRun { n, next_k: 0, value: 1.0 }
    }

    /// Must be called with k = 0, 1, 2, ... in order.
    fn at(&mut self, k: u64) -> f64 {
        debug_assert_eq!(k, self.next_k);
        if k > 0 {
            self.value *= (self.n + k) as f64 / k as f64;
        }
        self.next_k = k + 1;
        self.value
    }
}

fn require_m(func: &'static str, ok: bool, detail: String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Divergent(format!("{func}: {detail}")))
    }
}

/// Σ_{k≥0} H_k / ((n+k+1)^(m+1) binom(n+k, k)).
pub fn lhs_variant1(n: u64, m: u32, cfg: &EvalConfig) -> Result<SumResult> {
    require_m("lhs_variant1", m >= 1, format!("m = {m} < 1"))?;
    let h = cache(cfg, 1);
    let mut b = BinomRun::new(n);
    let s = (m + 1) as i32;
    sum_with_tail(
        0,
        |k| h.h1(k as usize) / (((n + k + 1) as f64).powi(s) * b.at(k)),
        &|t, o| {
            product(&[harm(1, t, 0.0, o)?, inv_pow(t, (n + 1) as f64, s as f64, o)?, inv_binom(n, t, o)?])
        },
        cfg,
    )
}

/// Σ_{k≥0} (H_k² − H_k^(2)) / ((n+k+1)^(m+1) binom(n+k, k)).
pub fn lhs_variant2(n: u64, m: u32, cfg: &EvalConfig) -> Result<SumResult> {
    require_m("lhs_variant2", m >= 1, format!("m = {m} < 1"))?;
    let h = cache(cfg, 1);
    let mut b = BinomRun::new(n);
    let s = (m + 1) as i32;
    sum_with_tail(
        0,
        |k| {
            let (h1, h2) = (h.h1(k as usize), h.h2(k as usize));
            (h1 * h1 - h2) / (((n + k + 1) as f64).powi(s) * b.at(k))
        },
        &|t, o| {
            product(&[quad_harm(t, 0.0, o)?, inv_pow(t, (n + 1) as f64, s as f64, o)?, inv_binom(n, t, o)?])
        },
        cfg,
    )
}

/// Σ_{k≥1} (H_k² − H_k^(2)) / k^(m+1).
pub fn lhs_variant2_kpower(m: u32, cfg: &EvalConfig) -> Result<SumResult> {
    require_m("lhs_variant2_kpower", m >= 1, format!("m = {m} < 1"))?;
    let h = cache(cfg, 1);
    let s = (m + 1) as i32;
    sum_with_tail(
        1,
        |k| {
            let (h1, h2) = (h.h1(k as usize), h.h2(k as usize));
            (h1 * h1 - h2) / (k as f64).powi(s)
        },
        &|t, o| product(&[quad_harm(t, 0.0, o)?, inv_pow(t, 0.0, s as f64, o)?]),
        cfg,
    )
}

/// H(t+shift)² − H^(2)(t+shift).
fn quad_harm(t: f64, shift: f64, o: usize) -> Result<Jet1> {
    let h1 = harm(1, t, shift, o)?;
    h1.checked_mul(&h1)?.checked_sub(&harm(2, t, shift, o)?)
}

fn check_x(func: &'static str, x: f64) -> Result<()> {
    if x > -1.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(func, format!("x = {x} must exceed -1")))
    }
}

/// Terms d_k = (−1)^k binom(x, k), advanced in order.
struct SignedBinomRun {
    x: f64,
    value: f64,
}

impl SignedBinomRun {
    fn new(x: f64) -> Self {
        SignedBinomRun { x, value: 1.0 }
    }

    fn at(&mut self, k: u64) -> f64 {
        if k > 0 {
            self.value *= (k as f64 - 1.0 - self.x) / k as f64;
        }
        self.value
    }
}

/// Σ_{k≥1} (−1)^(k−1) binom(x, k) / k^m.
pub fn lhs_base_binomial(x: f64, m: u32, cfg: &EvalConfig) -> Result<SumResult> {
    check_x("lhs_base_binomial", x)?;
    require_m("lhs_base_binomial", m >= 1, format!("m = {m} < 1"))?;
    let mut d = SignedBinomRun::new(x);
    d.at(0);
    let s = m as i32;
    let mut term = move |k: u64| -d.at(k) / (k as f64).powi(s);
    if is_nonneg_integer(x) {
        if x == 0.0 {
            return Ok(SumResult::exact(0.0, 0));
        }
        return sum_finite(1, x as u64, term);
    }
    sum_with_tail(
        1,
        &mut term,
        &|t, o| Ok(signed_binom(x, t, o)?.checked_mul(&inv_pow(t, 0.0, s as f64, o)?)?.negate()),
        cfg,
    )
}

/// Σ_{k≥0} (−1)^k binom(x, k) / (p+k)^(m+1).
pub fn lhs_base_shifted(x: f64, p: f64, m: u32, cfg: &EvalConfig) -> Result<SumResult> {
    check_x("lhs_base_shifted", x)?;
    check_p("lhs_base_shifted", p, 0.0)?;
    let mut d = SignedBinomRun::new(x);
    let s = (m + 1) as i32;
    let mut term = move |k: u64| d.at(k) / (p + k as f64).powi(s);
    if is_nonneg_integer(x) {
        return sum_finite(0, x as u64, term);
    }
    sum_with_tail(0, &mut term, &|t, o| signed_binom(x, t, o)?.checked_mul(&inv_pow(t, p, s as f64, o)?), cfg)
}

/// Σ_{k≥0} (−1)^(n−1) / ((n+k+1)^(m+1) binom(n+k, k)).
pub fn lhs_alt(n: u64, m: u32, cfg: &EvalConfig) -> Result<SumResult> {
    require_m("lhs_alt", n + m as u64 >= 1, format!("n = {n}, m = {m}"))?;
    let sg = -sign(n);
    let mut b = BinomRun::new(n);
    let s = (m + 1) as i32;
    sum_with_tail(
        0,
        |k| sg / (((n + k + 1) as f64).powi(s) * b.at(k)),
        &|t, o| Ok(inv_pow(t, (n + 1) as f64, s as f64, o)?.checked_mul(&inv_binom(n, t, o)?)?.scale(sg)),
        cfg,
    )
}

/// p must keep every denominator p+n+k (k ≥ 1) positive: p > −(n+1).
fn check_p(func: &'static str, p: f64, min: f64) -> Result<()> {
    if p > min && p.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(func, format!("p = {p} must exceed {min}")))
    }
}

/// Σ_{k≥1} (−1)^n / (k (p+n+k)^(m+1) binom(n+k, k)).
pub fn lhs_variant3(p: f64, n: u64, m: u32, cfg: &EvalConfig) -> Result<SumResult> {
    check_p("lhs_variant3", p, -((n + 1) as f64))?;
    let sg = sign(n);
    let mut b = BinomRun::new(n);
    b.at(0);
    let s = (m + 1) as i32;
    let c = p + n as f64;
    sum_with_tail(
        1,
        |k| sg / (k as f64 * (c + k as f64).powi(s) * b.at(k)),
        &|t, o| {
            Ok(product(&[inv_pow(t, 0.0, 1.0, o)?, inv_pow(t, c, s as f64, o)?, inv_binom(n, t, o)?])?
                .scale(sg))
        },
        cfg,
    )
}

/// Σ_{k≥1} (−1)^n H_{k−1} / (k (p+n+k)^(m+1) binom(n+k, k)).
pub fn lhs_variant3h(p: f64, n: u64, m: u32, cfg: &EvalConfig) -> Result<SumResult> {
    check_p("lhs_variant3h", p, -((n + 1) as f64))?;
    let h = cache(cfg, 1);
    let sg = sign(n);
    let mut b = BinomRun::new(n);
    b.at(0);
    let s = (m + 1) as i32;
    let c = p + n as f64;
    sum_with_tail(
        1,
        |k| sg * h.h1(k as usize - 1) / (k as f64 * (c + k as f64).powi(s) * b.at(k)),
        &|t, o| {
            Ok(product(&[
                harm(1, t, -1.0, o)?,
                inv_pow(t, 0.0, 1.0, o)?,
                inv_pow(t, c, s as f64, o)?,
                inv_binom(n, t, o)?,
            ])?
            .scale(sg))
        },
        cfg,
    )
}

/// Σ_{k≥1} (H_{k−1}² − H_{k−1}^(2)) / (k (p+n+k)^m binom(n+k, k)).
pub fn lhs_variant4(p: f64, n: u64, m: u32, cfg: &EvalConfig) -> Result<SumResult> {
    check_p("lhs_variant4", p, -((n + 1) as f64))?;
    require_m("lhs_variant4", n + m as u64 >= 1, format!("n = {n}, m = {m}"))?;
    let h = cache(cfg, 1);
    let mut b = BinomRun::new(n);
    b.at(0);
    let s = m as i32;
    let c = p + n as f64;
    sum_with_tail(
        1,
        |k| {
            let (h1, h2) = (h.h1(k as usize - 1), h.h2(k as usize - 1));
            (h1 * h1 - h2) / (k as f64 * (c + k as f64).powi(s) * b.at(k))
        },
        &|t, o| {
            product(&[
                quad_harm(t, -1.0, o)?,
                inv_pow(t, 0.0, 1.0, o)?,
                inv_pow(t, c, s as f64, o)?,
                inv_binom(n, t, o)?,
            ])
        },
        cfg,
    )
}

/// Σ_{k≥0} (H_k − 2H_{2k}) binom(2k, k) / (4^k (p+k)^(m+1)).
pub fn lhs_central_binom(p: f64, m: u32, cfg: &EvalConfig) -> Result<SumResult> {
    check_p("lhs_central_binom", p, 0.0)?;
    let h = cache(cfg, 2);
    let mut ck = 1.0;
    let s = (m + 1) as i32;
    sum_with_tail(
        0,
        |k| {
            if k > 0 {
                ck *= (2 * k - 1) as f64 / (2 * k) as f64;
            }
            (h.h1(k as usize) - 2.0 * h.h1(2 * k as usize)) * ck / (p + k as f64).powi(s)
        },
        &|t, o| {
            let hh = harm(1, t, 0.0, o)?.checked_sub(&harm_scaled(2.0, t, o)?.scale(2.0))?;
            product(&[hh, central(t, o)?, inv_pow(t, p, s as f64, o)?])
        },
        cfg,
    )
}

/// Linear Euler sum S(a, q) = Σ_{n≥1} H_n^(a) / n^q.
pub fn lhs_linear_euler(a: u32, q: u32, cfg: &EvalConfig) -> Result<SumResult> {
    require_m("lhs_linear_euler", q >= 2, format!("q = {q} < 2"))?;
    if a == 0 {
        return Err(Error::domain("lhs_linear_euler", "a must be >= 1"));
    }
    let mut run = CompensatedSum::new();
    sum_with_tail(
        1,
        |k| {
            run.add((k as f64).powi(-(a as i32)));
            run.value() / (k as f64).powi(q as i32)
        },
        &|t, o| harm(a, t, 0.0, o)?.checked_mul(&inv_pow(t, 0.0, q as f64, o)?),
        cfg,
    )
}

/// Quadratic Euler sum S(1²; q) = Σ_{n≥1} H_n² / n^q.
pub fn lhs_quadratic_euler(q: u32, cfg: &EvalConfig) -> Result<SumResult> {
    require_m("lhs_quadratic_euler", q >= 2, format!("q = {q} < 2"))?;
    let h = cache(cfg, 1);
    sum_with_tail(
        1,
        |k| h.h1(k as usize).powi(2) / (k as f64).powi(q as i32),
        &|t, o| {
            let h1 = harm(1, t, 0.0, o)?;
            product(&[h1.clone(), h1, inv_pow(t, 0.0, q as f64, o)?])
        },
        cfg,
    )
}
