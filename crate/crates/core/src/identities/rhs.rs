//! Closed-form right-hand sides.

use crate::compensated::CompensatedSum;
use crate::error::{Error, Result};
use crate::jet::{gamma_ratio_jet, ln_gamma_ratio_jet, mixed_partial, polygamma_jet, JetArith, RatioVariant};
use crate::special_fn::consts::{binomial_int, factorial, LN_2, SQRT_PI};
use crate::special_fn::{digamma, gamma, polygamma, zeta_int, HarmonicCache, EULER_GAMMA as G, ZETA2, ZETA3};

use RatioVariant::{BetaShift0, BetaShift1};

const MAX_N: u64 = 160;

fn sign(k: u64) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn check_n(func: &'static str, n: u64, min: u64) -> Result<()> {
    if n < min || n > MAX_N {
        return Err(Error::domain(func, format!("n = {n} outside {min}..={MAX_N}")));
    }
    Ok(())
}

fn check_m(func: &'static str, m: u32, min: u32) -> Result<()> {
    if m < min {
        return Err(Error::domain(func, format!("m = {m} < {min}")));
    }
    Ok(())
}

fn check_p(func: &'static str, p: f64) -> Result<()> {
    if !(p > 0.0 && p.is_finite()) {
        return Err(Error::domain(func, format!("p = {p} must be positive")));
    }
    Ok(())
}

fn check_x(func: &'static str, x: f64) -> Result<()> {
    if !(x > -1.0 && x.is_finite()) {
        return Err(Error::domain(func, format!("x = {x} must exceed -1")));
    }
    Ok(())
}

fn partial(v: RatioVariant, x: f64, z: f64, a: usize, b: u32) -> Result<f64> {
    let j = gamma_ratio_jet(v, x, z, a, b as usize)?;
    mixed_partial(&j, a, b as usize)
}

fn fact(m: u32) -> f64 {
    factorial(m)
}

fn choose(n: u64, k: u64) -> f64 {
    binomial_int(n as u32, k as u32)
}

/// H_j^3 + 2 H_j^(3) + 3 H_j H_j^(2)
fn cubic(h: &HarmonicCache, j: usize) -> f64 {
    let (h1, h2, h3) = (h.h1(j), h.h2(j), h.h3(j));
    h1 * h1 * h1 + 2.0 * h3 + 3.0 * h1 * h2
}

/// Σ_{k=1}^n (−1)^(k−1) binom(n,k) w(k) / k^m
fn finite_over_k(n: u64, m: u32, w: impl Fn(u64) -> f64) -> f64 {
    (1..=n)
        .map(|k| -sign(k) * choose(n, k) * w(k) / (k as f64).powi(m as i32))
        .collect::<CompensatedSum>()
        .value()
}

/// Σ_{k=0}^n (−1)^k binom(n,k) w(k) / (p+k)^e
fn finite_over_pk(n: u64, p: f64, e: u32, w: impl Fn(u64) -> f64) -> f64 {
    (0..=n)
        .map(|k| sign(k) * choose(n, k) * w(k) / (p + k as f64).powi(e as i32))
        .collect::<CompensatedSum>()
        .value()
}

/// (−1)^m/m! ∂z^m Γ(x+1)Γ(z)/Γ(x+z) at z = 1.
pub fn rhs_thm_e15(x: f64, m: u32) -> Result<f64> {
    check_x("rhs_thm_e15", x)?;
    check_m("rhs_thm_e15", m, 1)?;
    let j = gamma_ratio_jet(BetaShift0, x, 1.0, 0, m as usize)?;
    Ok(sign(m as u64) * j.coeff(0, m as usize))
}

/// Alternating form with a constant sign (−1)^(n−1).
pub fn rhs_thm_t25(n: u64, m: u32) -> Result<f64> {
    check_n("rhs_thm_t25", n, 1)?;
    check_m("rhs_thm_t25", m, 1)?;
    let h = HarmonicCache::new(n as usize);
    let hn = h.h1(n as usize);
    let fin = finite_over_k(n, m, |k| hn - h.h1((n - k) as usize));
    let d = partial(BetaShift0, n as f64, 1.0, 1, m)?;
    Ok(fin - sign(m as u64) / fact(m) * d)
}

/// Closed form of Σ H_k / ((n+k+1)^(m+1) binom(n+k,k)).
pub fn rhs_thm_31(n: u64, m: u32) -> Result<f64> {
    check_n("rhs_thm_31", n, 0)?;
    check_m("rhs_thm_31", m, 1)?;
    let h = HarmonicCache::new(n as usize);
    let (hn, h2n) = (h.h1(n as usize), h.h2(n as usize));
    let fin = finite_over_k(n, m, |k| {
        let j = (n - k) as usize;
        h.h1(j).powi(2) + h.h2(j) - h2n - hn * hn
    });
    let f1 = partial(BetaShift0, n as f64, 1.0, 1, m)?;
    let f2 = partial(BetaShift0, n as f64, 1.0, 2, m)?;
    let s = sign(m as u64 + n);
    Ok(sign(n) / 2.0 * fin - s / (2.0 * fact(m)) * f2 + s * hn / fact(m) * f1)
}

/// m ζ(m+1) − Σ_{k=1}^{m−2} ζ(k+1) ζ(m−k), the value of 2 Σ H_k/(k+1)^m.
pub fn rhs_cor_32(m: u32) -> Result<f64> {
    check_m("rhs_cor_32", m, 2)?;
    let s: f64 = (1..m.saturating_sub(1)).map(|k| zeta_int(k + 1) * zeta_int(m - k)).sum();
    Ok(m as f64 * zeta_int(m + 1) - s)
}

/// Closed form of Σ (H_k² − H_k^(2)) / ((n+k+1)^(m+1) binom(n+k,k)).
pub fn rhs_thm_33(n: u64, m: u32) -> Result<f64> {
    check_n("rhs_thm_33", n, 0)?;
    check_m("rhs_thm_33", m, 1)?;
    let h = HarmonicCache::new(n as usize);
    let (hn, h2n) = (h.h1(n as usize), h.h2(n as usize));
    let cn = cubic(&h, n as usize);
    let fin = finite_over_k(n, m, |k| cn - cubic(&h, (n - k) as usize));
    let j = gamma_ratio_jet(BetaShift0, n as f64, 1.0, 3, m as usize)?;
    let f = |a| mixed_partial(&j, a, m as usize);
    let comb = (hn * hn + h2n) * f(1)? - hn * f(2)? + f(3)? / 3.0;
    Ok(-sign(n) / 3.0 * fin + sign(m as u64 + n) / fact(m) * comb)
}

/// Σ_{l=1}^{m−1} (m−l) ζ(m−l+1) Σ_{j=1}^{l−1} ζ(j+1) ζ(l−j+1), divided by m.
fn nested_zeta(m: u32) -> f64 {
    let mut s = 0.0;
    for l in 1..m {
        let inner: f64 = (1..l).map(|j| zeta_int(j + 1) * zeta_int(l - j + 1)).sum();
        s += (m - l) as f64 * zeta_int(m - l + 1) * inner;
    }
    s / m as f64
}

/// Zeta-product value of Σ (H_k² − H_k^(2)) / (k+1)^(m+1).
pub fn rhs_cor_34(m: u32) -> Result<f64> {
    check_m("rhs_cor_34", m, 1)?;
    let mf = m as f64;
    let a: f64 = (1..m).map(|j| (j + 1) as f64 * zeta_int(j + 2) * zeta_int(m + 1 - j)).sum();
    Ok((mf + 1.0) * (mf + 2.0) / 3.0 * zeta_int(m + 3) - a + nested_zeta(m))
}

/// The same value before the zeta products are collected.
pub fn rhs_cor_34_unsimplified(m: u32) -> Result<f64> {
    check_m("rhs_cor_34_unsimplified", m, 1)?;
    let mf = m as f64;
    let a: f64 = (0..m.saturating_sub(1))
        .map(|j| ((j + 1) * (j + 2)) as f64 * zeta_int(3 + j) * zeta_int(m - j))
        .sum();
    let b: f64 = (0..m).map(|j| ((j + 1) * (m - j)) as f64 * zeta_int(j + 2) * zeta_int(m + 1 - j)).sum();
    Ok(ZETA2 * zeta_int(m + 1) + (mf + 1.0) * (mf + 2.0) / 3.0 * zeta_int(m + 3) - a / mf - b / mf
        + nested_zeta(m))
}

/// Zeta-product value of Σ_{k≥1} (H_k² − H_k^(2)) / k^(m+1).
pub fn rhs_cor_34a(m: u32) -> Result<f64> {
    check_m("rhs_cor_34a", m, 1)?;
    let mf = m as f64;
    let a: f64 = (2..=m).map(|j| zeta_int(j + 1) * zeta_int(m + 2 - j)).sum();
    let b: f64 = (1..m).map(|j| j as f64 * zeta_int(j + 2) * zeta_int(m + 1 - j)).sum();
    Ok((mf + 2.0) * (mf + 4.0) / 3.0 * zeta_int(m + 3) - ZETA2 * zeta_int(m + 1) - 2.0 * a - b
        + nested_zeta(m))
}

/// (−1)^m/m! ∂s^m Γ(x+1)Γ(s)/Γ(x+s+1) at s = p.
pub fn rhs_thm_35(x: f64, p: f64, m: u32) -> Result<f64> {
    check_x("rhs_thm_35", x)?;
    check_p("rhs_thm_35", p)?;
    let j = gamma_ratio_jet(BetaShift1, x, p, 0, m as usize)?;
    Ok(sign(m as u64) * j.coeff(0, m as usize))
}

/// √π (−1)^m/m! d^m/ds^m [Γ(s)/Γ(s+½) (ψ(½) − ψ(s+½))] at s = p.
pub fn rhs_cor_36(p: f64, m: u32) -> Result<f64> {
    check_p("rhs_cor_36", p)?;
    let o = m as usize;
    let ratio = ln_gamma_ratio_jet(p, 0.0, 0.5, o)?.exp();
    let psi_half = digamma(0.5)?;
    let diff = polygamma_jet(0, p + 0.5, o)?.rebase(p).negate().add_const(psi_half);
    let prod = ratio.checked_mul(&diff)?;
    Ok(SQRT_PI * sign(m as u64) * prod.coeffs()[o])
}

/// The same value read off the BETA_SHIFT1 jet at x = −½.
pub fn rhs_cor_36_via_ratio(p: f64, m: u32) -> Result<f64> {
    check_p("rhs_cor_36_via_ratio", p)?;
    let j = gamma_ratio_jet(BetaShift1, -0.5, p, 1, m as usize)?;
    Ok(sign(m as u64) * j.coeff(1, m as usize))
}

/// Closed form of Σ_{k≥1} (−1)^n / (k (p+n+k)^(m+1) binom(n+k,k)).
pub fn rhs_thm_37(p: f64, n: u64, m: u32) -> Result<f64> {
    check_p("rhs_thm_37", p)?;
    check_n("rhs_thm_37", n, 0)?;
    let h = HarmonicCache::new(n as usize);
    let hn = h.h1(n as usize);
    let fin = finite_over_pk(n, p, m + 1, |k| hn - h.h1((n - k) as usize));
    Ok(fin - sign(m as u64) / fact(m) * partial(BetaShift1, n as f64, p, 1, m)?)
}

fn check_p_shift(func: &'static str, p: f64) -> Result<()> {
    if !(p > -1.0 && p != 0.0 && p.is_finite()) {
        return Err(Error::domain(func, format!("p = {p} must exceed -1 and be nonzero")));
    }
    Ok(())
}

/// (γ + Σ_{j=0}^m (−1)^j p^j/j! ψ^(j)(p+1)) / p^(m+1).
pub fn rhs_cor_38(p: f64, m: u32) -> Result<f64> {
    check_p_shift("rhs_cor_38", p)?;
    let mut s = CompensatedSum::new();
    s.add(G);
    for j in 0..=m {
        s.add(sign(j as u64) * p.powi(j as i32) / fact(j) * polygamma(j, p + 1.0)?);
    }
    Ok(s.value() / p.powi(m as i32 + 1))
}

/// Closed form of Σ_{k≥1} (−1)^n H_{k−1} / (k (p+n+k)^(m+1) binom(n+k,k)).
pub fn rhs_thm_39(p: f64, n: u64, m: u32) -> Result<f64> {
    check_p("rhs_thm_39", p)?;
    check_n("rhs_thm_39", n, 0)?;
    let h = HarmonicCache::new(n as usize);
    let (hn, h2n) = (h.h1(n as usize), h.h2(n as usize));
    let fin = finite_over_pk(n, p, m + 1, |k| {
        let j = (n - k) as usize;
        hn * hn + h2n - h.h1(j).powi(2) - h.h2(j)
    });
    let j = gamma_ratio_jet(BetaShift1, n as f64, p, 2, m as usize)?;
    let d1 = mixed_partial(&j, 1, m as usize)?;
    let d2 = mixed_partial(&j, 2, m as usize)?;
    Ok(fin / 2.0 + sign(m as u64) / (2.0 * fact(m)) * (d2 - 2.0 * hn * d1))
}

fn psi_table(p: f64, top: u32) -> Result<Vec<f64>> {
    (0..=top).map(|j| polygamma(j, p + 1.0)).collect()
}

fn cor_310_parts(p: f64, m: u32) -> Result<(f64, f64)> {
    let ps = psi_table(p, m + 1)?;
    let lead = 0.5 * ((G + ps[0]).powi(2) + ZETA2 - ps[1]);
    let mut s = CompensatedSum::new();
    for l in 1..=m {
        let conv: f64 =
            (0..=l).map(|j| choose(l as u64, j as u64) * ps[j as usize] * ps[(l - j) as usize]).sum();
        let br = 2.0 * G * ps[l as usize] - ps[l as usize + 1] + conv;
        s.add(sign(l as u64) / (fact(l) * p.powi((m - l + 1) as i32)) * br);
    }
    Ok((lead, 0.5 * s.value()))
}

/// Closed form of Σ_{k≥1} H_{k−1} / (k (p+k)^(m+1)).
pub fn rhs_cor_310(p: f64, m: u32) -> Result<f64> {
    check_p_shift("rhs_cor_310", p)?;
    let (lead, rest) = cor_310_parts(p, m)?;
    Ok(lead / p.powi(m as i32 + 1) + rest)
}

/// The stated form, whose leading term lacks the 1/p^(m+1) factor.
pub fn rhs_cor_310_printed(p: f64, m: u32) -> Result<f64> {
    check_p_shift("rhs_cor_310_printed", p)?;
    let (lead, rest) = cor_310_parts(p, m)?;
    Ok(lead + rest)
}

fn thm_311_with(p: f64, n: u64, m: u32, z_order: u32) -> Result<f64> {
    let h = HarmonicCache::new(n as usize);
    let (hn, h2n) = (h.h1(n as usize), h.h2(n as usize));
    let cn = cubic(&h, n as usize);
    let fin = finite_over_pk(n, p, m, |k| cn - cubic(&h, (n - k) as usize));
    let j = gamma_ratio_jet(BetaShift1, n as f64, p, 3, z_order as usize)?;
    let d = |a| mixed_partial(&j, a, z_order as usize);
    let comb = (hn * hn + h2n) * d(1)? - hn * d(2)? + d(3)? / 3.0;
    Ok(sign(n) / 3.0 * fin + sign(m as u64 + n) / fact(m - 1) * comb)
}

/// Closed form of Σ_{k≥1} (H_{k−1}² − H_{k−1}^(2)) / (k (p+n+k)^m binom(n+k,k)).
pub fn rhs_thm_311(p: f64, n: u64, m: u32) -> Result<f64> {
    check_p("rhs_thm_311", p)?;
    check_n("rhs_thm_311", n, 0)?;
    check_m("rhs_thm_311", m, 1)?;
    thm_311_with(p, n, m, m - 1)
}

/// The stated form, which differentiates m rather than m−1 times in z.
pub fn rhs_thm_311_printed(p: f64, n: u64, m: u32) -> Result<f64> {
    check_p("rhs_thm_311_printed", p)?;
    check_n("rhs_thm_311_printed", n, 0)?;
    check_m("rhs_thm_311_printed", m, 1)?;
    thm_311_with(p, n, m, m)
}

/// ℓ-th derivative of g at p, from the expansion in ψ^(j)(p+1).
pub fn g_derivative(p: f64, l: u32) -> Result<f64> {
    let ps = psi_table(p, l + 2)?;
    let q = |j: u32| ps[j as usize];
    let c = |a: u32, b: u32| binomial_int(a, b);
    let conv = |k: u32| -> f64 { (0..=k).map(|j| c(k, j) * q(j) * q(k - j)).sum() };
    let mut s = -3.0 * (G * G + ZETA2) * q(l) + 3.0 * G * q(l + 1) - q(l + 2);
    s += 3.0 * (0..=l).map(|j| c(l, j) * q(j + 1) * q(l - j)).sum::<f64>();
    s -= 3.0 * G * conv(l);
    s -= (0..=l).map(|k| c(l, k) * conv(k) * q(l - k)).sum::<f64>();
    if l == 0 {
        s += -G * G * G - 3.0 * G * ZETA2 - 2.0 * ZETA3;
    }
    Ok(s)
}

/// Closed form of Σ_{k≥1} (H_{k−1}² − H_{k−1}^(2)) / (k (p+k)^m).
pub fn rhs_cor_312(p: f64, m: u32) -> Result<f64> {
    check_p("rhs_cor_312", p)?;
    check_m("rhs_cor_312", m, 1)?;
    let mut s = CompensatedSum::new();
    for l in 0..m {
        s.add(-sign(l as u64) * g_derivative(p, l)? / (3.0 * fact(l) * p.powi((m - l) as i32)));
    }
    Ok(s.value())
}

/// The stated form: Σ_{ℓ=0}^m binom(m,ℓ) (−1)^(m−ℓ) (m−ℓ)! g^(ℓ)(p) / p^(m−ℓ+1).
pub fn rhs_cor_312_printed(p: f64, m: u32) -> Result<f64> {
    check_p("rhs_cor_312_printed", p)?;
    check_m("rhs_cor_312_printed", m, 1)?;
    let mut s = CompensatedSum::new();
    for l in 0..=m {
        let w = choose(m as u64, l as u64) * sign((m - l) as u64) * fact(m - l);
        s.add(w * g_derivative(p, l)? / p.powi((m - l + 1) as i32));
    }
    Ok(s.value())
}

/// Value of Σ_{k≥1} (2H_{2k} − H_k) binom(2k,k) / ((p+k)² 4^k).
pub fn rhs_central_m1(p: f64) -> Result<f64> {
    check_p("rhs_central_m1", p)?;
    let ph = p + 0.5;
    let a = digamma(p)? - digamma(ph)?;
    let b = digamma(0.5)? - digamma(ph)?;
    Ok(SQRT_PI * gamma(p)? / gamma(ph)? * (a * b - polygamma(1, ph)?))
}

/// π (4 ln²2 − π²/6).
pub fn central_half_value() -> f64 {
    std::f64::consts::PI * (4.0 * LN_2 * LN_2 - ZETA2)
}

fn half_bracket(m: u32) -> f64 {
    let mut s = CompensatedSum::new();
    for l in 1..=m {
        let two = |e: u32| 2f64.powi(e as i32);
        let mut b = (l + 1) as f64 * (1.0 - two(l + 2)) * zeta_int(l + 2)
            + 4.0 * LN_2 * (two(l + 1) - 1.0) * zeta_int(l + 1);
        for j in 1..l {
            b += (two(j + 1) - 1.0) * (two(l - j + 1) - 1.0) * zeta_int(j + 1) * zeta_int(l - j + 1);
        }
        s.add(sign(l as u64) * two(l).recip() * b);
    }
    sign(m as u64 + 1) * 2f64.powi(m as i32) * s.value()
}

/// Zeta form of Σ_{k≥2} H_{k−1} / (k (k−½)^(m+1)), with leading term (−2)^(m+1)(2 ln²2 − ζ(2)).
pub fn rhs_ex4(m: u32) -> f64 {
    (-2f64).powi(m as i32 + 1) * (2.0 * LN_2 * LN_2 - ZETA2) + half_bracket(m)
}

/// The stated zeta form, with leading term 2 ln²2 − ζ(2).
pub fn rhs_ex4_printed(m: u32) -> f64 {
    2.0 * LN_2 * LN_2 - ZETA2 + half_bracket(m)
}

/// m + 1 − Σ_{k=1}^m ζ(k+1).
pub fn rhs_zeta_tail(m: u32) -> f64 {
    m as f64 + 1.0 - (1..=m).map(|k| zeta_int(k + 1)).sum::<f64>()
}
