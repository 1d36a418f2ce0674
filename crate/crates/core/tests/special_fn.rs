use proptest::prelude::*;

use eulersum::special_fn::consts::{factorial, LN_2};
use eulersum::special_fn::{
    digamma, extended_harmonic, gamma, gen_harmonic, harmonic, polygamma, EULER_GAMMA, ZETA2,
};

use std::f64::consts::PI;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

#[test]
fn polygamma_recurrence_grid() {
    for k in 0..=6u32 {
        for z in [0.3, 1.7, 4.2] {
            let lhs = polygamma(k, z + 1.0).unwrap() - polygamma(k, z).unwrap();
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let rhs = sign * factorial(k) / z.powi(k as i32 + 1);
            assert!(rel(lhs, rhs) < 1e-11, "k={k} z={z}: {lhs} vs {rhs}");
        }
    }
}

#[test]
fn reflection_grid() {
    for z in [0.1, 0.25, 0.5, 0.75, 1.3] {
        let v = gamma(z).unwrap() * gamma(1.0 - z).unwrap() * (PI * z).sin();
        assert!(rel(v, PI) < 1e-12, "z={z}: {v}");
    }
}

#[test]
fn harmonic_bridge_up_to_100() {
    for n in 0..=100u64 {
        let h = harmonic(n);
        assert!((h - (EULER_GAMMA + digamma(n as f64 + 1.0).unwrap())).abs() <= 1e-12 * h.max(1.0));
        assert!((extended_harmonic(n as f64, 1).unwrap() - h).abs() <= 1e-12 * h.max(1.0));
    }
}

#[test]
fn generalized_harmonic_bridge() {
    for m in 1..=5u32 {
        let zeta = eulersum::special_fn::zeta_int(m + 1);
        for n in [0u64, 1, 2, 5, 17, 60] {
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            let bridge = zeta + sign / factorial(m) * polygamma(m, n as f64 + 1.0).unwrap();
            let h = gen_harmonic(n, m + 1);
            assert!((bridge - h).abs() <= 1e-11 * h.max(1.0), "n={n} m={m}: {bridge} vs {h}");
        }
    }
}

#[test]
fn half_integer_digamma() {
    let psi_half = digamma(0.5).unwrap();
    assert!(rel(psi_half, -EULER_GAMMA - 2.0 * LN_2) < 1e-14);
    for k in 1..=8u64 {
        let lhs = psi_half - digamma(0.5 - k as f64).unwrap();
        let rhs = harmonic(k) - 2.0 * harmonic(2 * k);
        assert!(rel(lhs, rhs) < 1e-11, "k={k}: {lhs} vs {rhs}");
        // the reflected argument has the same digamma value
        assert!(rel(digamma(0.5 - k as f64).unwrap(), digamma(0.5 + k as f64).unwrap()) < 1e-11);
    }
}

#[test]
fn half_integer_gamma() {
    // Γ(1/2 − k) = (−1)^k 4^k k! √π / (2k)!
    for k in 0..=8u32 {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let want = sign * 4f64.powi(k as i32) * factorial(k) * PI.sqrt() / factorial(2 * k);
        assert!(rel(gamma(0.5 - k as f64).unwrap(), want) < 1e-13, "k={k}");
    }
}

/// Errors of `f(−k + ε) − limit` at ε = 1e−3, 1e−4, 1e−5. The effective ε is
/// recomputed as z + k so the sweep measures the function, not the rounding of z.
fn sweep(k: u32, f: impl Fn(f64, f64) -> f64, limit: f64) -> [f64; 3] {
    [1e-3, 1e-4, 1e-5].map(|eps| {
        let z = -(k as f64) + eps;
        let eps_eff = z + k as f64;
        (f(z, eps_eff) - limit).abs() / limit.abs().max(1.0)
    })
}

fn assert_first_order(name: &str, k: u32, errs: [f64; 3]) {
    for w in errs.windows(2) {
        let ratio = w[0] / w[1];
        assert!((5.0..=20.0).contains(&ratio), "{name} k={k}: errors {errs:?}, ratio {ratio}");
    }
    assert!(errs[2] < 1e-3, "{name} k={k}: {errs:?}");
}

fn signed_factorial(k: u32, parity: u32) -> f64 {
    let s = if (k + parity).is_multiple_of(2) { 1.0 } else { -1.0 };
    s * factorial(k)
}

#[test]
fn gamma_residue_limit() {
    for k in 0..=4u32 {
        let limit = signed_factorial(0, k) / factorial(k);
        let errs = sweep(k, |z, eps| eps * gamma(z).unwrap(), limit);
        assert_first_order("residue", k, errs);
    }
}

#[test]
fn psi_over_gamma_limit() {
    for k in 0..=4u32 {
        let limit = signed_factorial(k, 1);
        let errs = sweep(k, |z, _| digamma(z).unwrap() / gamma(z).unwrap(), limit);
        assert_first_order("psi/gamma", k, errs);
    }
}

#[test]
fn second_lemma_limit() {
    for k in 0..=4u32 {
        let limit = 2.0 * signed_factorial(k, 1) * digamma(k as f64 + 1.0).unwrap();
        let f = |z: f64, _| {
            let psi = digamma(z).unwrap();
            (psi * psi - polygamma(1, z).unwrap()) / gamma(z).unwrap()
        };
        assert_first_order("psi^2 - psi'", k, sweep(k, f, limit));
    }
}

/// Regular parts of ψ, ψ′, ψ″ at z = −k + ε after removing the pole at −k,
/// from the shift formula at z + k + 1.
fn regular_parts(k: u32, z: f64) -> [f64; 3] {
    let shifted = z + k as f64 + 1.0;
    let (mut r0, mut r1, mut r2) =
        (digamma(shifted).unwrap(), polygamma(1, shifted).unwrap(), polygamma(2, shifted).unwrap());
    for j in 0..k {
        let w = z + j as f64;
        r0 -= 1.0 / w;
        r1 += 1.0 / (w * w);
        r2 -= 2.0 / (w * w * w);
    }
    [r0, r1, r2]
}

#[test]
fn third_lemma_limit() {
    for k in 0..=4u32 {
        let psi_k1 = digamma(k as f64 + 1.0).unwrap();
        let h2 = gen_harmonic(k as u64, 2);
        let limit = 3.0 * signed_factorial(k, 0) * (ZETA2 + h2 - psi_k1 * psi_k1);
        // With ψ = s + r0, ψ′ = s² + r1, ψ″ = 2s³ + r2 and s = −1/ε the s³ and s²
        // terms cancel exactly; evaluated directly they leave ~1e−6 of rounding at ε = 1e−5.
        let f = |z: f64, eps: f64| {
            let [r0, r1, r2] = regular_parts(k, z);
            let s = -1.0 / eps;
            (3.0 * s * (r0 * r0 - r1) + r0.powi(3) - 3.0 * r0 * r1 + r2) / gamma(z).unwrap()
        };
        assert_first_order("psi^3 - 3 psi psi' + psi''", k, sweep(k, f, limit));
    }
}

#[test]
fn third_lemma_direct_form_near_pole() {
    // Direct evaluation agrees with the split form to within its rounding floor.
    for k in 0..=4u32 {
        for eps in [1e-3, 1e-4, 1e-5] {
            let z = -(k as f64) + eps;
            let eps = z + k as f64;
            let psi = digamma(z).unwrap();
            let (p1, p2) = (polygamma(1, z).unwrap(), polygamma(2, z).unwrap());
            let direct = (psi.powi(3) - 3.0 * psi * p1 + p2) / gamma(z).unwrap();
            let [r0, r1, r2] = regular_parts(k, z);
            let s = -1.0 / eps;
            let split = (3.0 * s * (r0 * r0 - r1) + r0.powi(3) - 3.0 * r0 * r1 + r2) / gamma(z).unwrap();
            let floor = 64.0 * f64::EPSILON / (eps * eps);
            assert!((direct - split).abs() <= floor * split.abs().max(1.0), "k={k} eps={eps}");
        }
    }
}

proptest! {
    #[test]
    fn recurrence(k in 0u32..=6, z in 0.05f64..30.0) {
        let lhs = polygamma(k, z + 1.0).unwrap();
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let rhs = polygamma(k, z).unwrap() + sign * factorial(k) / z.powi(k as i32 + 1);
        let scale = lhs.abs().max(polygamma(k, z).unwrap().abs());
        prop_assert!((lhs - rhs).abs() <= 1e-12 * scale, "{} vs {}", lhs, rhs);
    }

    #[test]
    fn reflection(z in 0.01f64..0.99) {
        let v = gamma(z).unwrap() * gamma(1.0 - z).unwrap() * (PI * z).sin();
        prop_assert!(rel(v, PI) < 1e-12);
    }

    #[test]
    fn digamma_reflection(z in 0.01f64..0.99) {
        let lhs = digamma(1.0 - z).unwrap() - digamma(z).unwrap();
        prop_assert!((lhs - PI / (PI * z).tan()).abs() <= 1e-12 * lhs.abs().max(1.0));
    }

    #[test]
    fn digamma_shift(z in 0.05f64..10.0, m in 1u32..=20) {
        let lhs = digamma(z + m as f64).unwrap() - digamma(z).unwrap();
        let rhs: f64 = (0..m).map(|j| 1.0 / (z + j as f64)).sum();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1.0));
    }

    #[test]
    fn polygamma_shift(k in 1u32..=4, z in 0.05f64..10.0, m in 1u32..=20) {
        let lhs = polygamma(k, z + m as f64).unwrap();
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let sum: f64 = (0..m).map(|j| (z + j as f64).powi(-(k as i32 + 1))).sum();
        let rhs = polygamma(k, z).unwrap() + sign * factorial(k) * sum;
        prop_assert!((lhs - rhs).abs() <= 1e-11 * polygamma(k, z).unwrap().abs());
    }

    #[test]
    fn extended_harmonic_matches_integers(n in 0u64..500, m in 1u32..=4) {
        let h = extended_harmonic(n as f64, m).unwrap();
        prop_assert!((h - gen_harmonic(n, m)).abs() <= 1e-12 * h.max(1.0));
    }

    #[test]
    fn extended_harmonic_step(eta in 0.0f64..50.0, m in 1u32..=4) {
        // H_η − H_{η−1} = η^{−m}
        let d = extended_harmonic(eta + 1.0, m).unwrap() - extended_harmonic(eta, m).unwrap();
        let want = (eta + 1.0).powi(-(m as i32));
        prop_assert!((d - want).abs() <= 1e-12 * extended_harmonic(eta + 1.0, m).unwrap().max(1.0));
    }
}
