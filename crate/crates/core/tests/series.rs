use eulersum::jet::Jet1;
use eulersum::series::*;
use eulersum::special_fn::consts::LN_2;
use eulersum::special_fn::{gen_harmonic, hurwitz_zeta, zeta_minus_one, EULER_GAMMA, ZETA2, ZETA3, ZETA4};
use eulersum::Error;
use proptest::prelude::*;
use std::f64::consts::PI;

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

fn assert_close(r: &SumResult, want: f64, tol: f64) {
    assert!(r.converged, "not converged: {r:?}");
    let err = (r.value - want).abs() / want.abs().max(1e-300);
    assert!(err <= tol, "{} vs {want}: rel err {err:e}", r.value);
}

#[test]
fn adaptive_geometric_and_telescoping() {
    let r = sum_adaptive(|k| 0.5f64.powi(k as i32), 0, &cfg()).unwrap();
    assert!(r.converged);
    assert!((r.value - 2.0).abs() < 1e-10 * 2.0);
    let loose = cfg().with_rel_tol(1e-7);
    let r = sum_adaptive(|k| 1.0 / (k as f64 * (k + 1) as f64), 1, &loose).unwrap();
    assert!(r.converged);
    assert!((r.value - 1.0).abs() <= 2.0 * loose.rel_tol, "{r:?}");
    assert!((1.0 - r.value) <= r.tail_estimate * 1.01);
}

#[test]
fn adaptive_goldbach() {
    let c = cfg().with_rel_tol(1e-14);
    let r = sum_adaptive(|j| zeta_minus_one(j as f64).unwrap(), 2, &c).unwrap();
    assert!(r.converged);
    assert!((r.value - 1.0).abs() < 1e-12, "{}", r.value);
}

#[test]
fn adaptive_errors_and_limits() {
    assert!(matches!(
        sum_adaptive(|k| if k == 5 { f64::NAN } else { 1.0 / (k * k) as f64 }, 1, &cfg()),
        Err(Error::NonFiniteTerm { index: 5, .. })
    ));
    let c = EvalConfig { max_terms: 1000, ..cfg() };
    let r = sum_adaptive(|k| 1.0 / k as f64, 1, &c).unwrap();
    assert!(!r.converged);
    assert_eq!(r.terms_used, 1000);
    assert!(sum_adaptive(|_| 0.0, 0, &EvalConfig { rel_tol: 0.0, ..cfg() }).is_err());
}

fn power(s: f64) -> impl Fn(f64, usize) -> eulersum::Result<Jet1> {
    move |t, o| Jet1::variable(t, o).powf(-s)
}

#[test]
fn em_tail_powers() {
    let t = em_tail(&power(2.0), 100, &cfg()).unwrap();
    let want = hurwitz_zeta(2.0, 101.0).unwrap();
    assert!((t.value - want).abs() < 1e-12 * want);
    // the subtraction form cancels digits, so it is checked in absolute terms
    assert!((ZETA2 - gen_harmonic(100, 2) - t.value).abs() < 1e-12);
    let t = em_tail(&power(4.0), 50, &cfg()).unwrap();
    let want = hurwitz_zeta(4.0, 51.0).unwrap();
    assert!((t.value - want).abs() < 1e-13 * want);
    assert!((ZETA4 - gen_harmonic(50, 4) - t.value).abs() < 1e-13);
}

#[test]
fn em_tail_asymptotic_harmonic() {
    // H_t replaced by ln t + γ + 1/(2t) − 1/(12t²) + 1/(120t⁴)
    let f = |t0: f64, o: usize| -> eulersum::Result<Jet1> {
        let t = Jet1::variable(t0, o);
        let ln = t.ln()?.add_const(EULER_GAMMA);
        let r = t.recip()?;
        let r2 = eulersum::jet::jet_mul(&r, &r)?;
        let r4 = eulersum::jet::jet_mul(&r2, &r2)?;
        let h = eulersum::jet::jet_add(&ln, &r.scale(0.5))?;
        let h = eulersum::jet::jet_add(&h, &r2.scale(-1.0 / 12.0))?;
        let h = eulersum::jet::jet_add(&h, &r4.scale(1.0 / 120.0))?;
        eulersum::jet::jet_mul(&h, &r2)
    };
    let k = 1000u64;
    let mut hk = 0.0;
    let mut partial = 0.0;
    for i in 1..=k {
        hk += 1.0 / i as f64;
        partial += hk / (i * i) as f64;
    }
    let total = partial + em_tail(&f, k, &cfg()).unwrap().value;
    assert!((total - 2.0 * ZETA3).abs() < 1e-9 * 2.0 * ZETA3, "{total}");
}

#[test]
fn em_tail_rejects_growing_terms() {
    let grow = |t: f64, o: usize| Jet1::variable(t, o).powf(0.5);
    assert!(matches!(em_tail(&grow, 100, &cfg()), Err(Error::NonMonotoneTail { .. })));
}

#[test]
fn variant1_examples() {
    assert_close(&lhs_variant1(0, 1, &cfg()).unwrap(), ZETA3, 1e-10);
    assert_close(&lhs_variant1(0, 2, &cfg()).unwrap(), ZETA4 / 4.0, 1e-10);
    assert_close(&lhs_variant1(1, 1, &cfg()).unwrap(), 0.15300902999217927813, 1e-10);
    assert!(matches!(lhs_variant1(0, 0, &cfg()), Err(Error::Divergent(_))));
}

#[test]
fn variant2_examples() {
    assert_close(&lhs_variant2_kpower(1, &cfg()).unwrap(), 2.5 * ZETA4, 1e-10);
    assert_close(&lhs_variant2(0, 1, &cfg()).unwrap(), 2.0 * ZETA4, 1e-10);
    assert_close(&lhs_variant2(2, 2, &cfg()).unwrap(), 0.0039201816139430941282, 1e-10);
    assert!(lhs_variant2(1, 0, &cfg()).is_err());
}

#[test]
fn kpower_bridge() {
    for m in 1..=3u32 {
        let a = lhs_variant2_kpower(m, &cfg()).unwrap().value;
        let b = lhs_variant2(0, m, &cfg()).unwrap().value;
        // H_k² − H_k^(2) at k and at k−1 differ by 2H_{k−1}/k, so a − b = 2 Σ H_{k−1}/k^(m+2)
        let c = 2.0 * (lhs_linear_euler(1, m + 2, &cfg()).unwrap().value - zeta(m + 3));
        assert!((a - b - c).abs() < 1e-8 * a.abs(), "m = {m}");
        let zz: f64 = (1..=m).map(|k| zeta(k + 1) * zeta(m + 2 - k)).sum();
        // Euler: Σ H_k/k^(m+2) = (m+4)/2 ζ(m+3) − ½ Σ_{k=1}^m ζ(k+1) ζ(m+2−k)
        let euler1 = (m as f64 + 4.0) / 2.0 * zeta(m + 3) - 0.5 * zz;
        assert!((c - 2.0 * (euler1 - zeta(m + 3))).abs() < 1e-8 * c.abs());
    }
}

fn zeta(n: u32) -> f64 {
    eulersum::special_fn::zeta_int(n)
}

#[test]
fn base_binomial_examples() {
    let r = lhs_base_binomial(2.0, 1, &cfg()).unwrap();
    assert_eq!(r.value, 1.5);
    assert_eq!(lhs_base_binomial(0.0, 3, &cfg()).unwrap().value, 0.0);
    assert_close(&lhs_base_binomial(0.5, 2, &cfg()).unwrap(), 0.54338323874839517519, 1e-10);
    assert!(lhs_base_binomial(-1.0, 1, &cfg()).is_err());
}

#[test]
fn base_shifted_examples() {
    assert_eq!(lhs_base_shifted(1.0, 1.0, 0, &cfg()).unwrap().value, 0.5);
    for &p in &[0.5, 1.0, 2.5] {
        let r = lhs_base_shifted(0.0, p, 3, &cfg()).unwrap();
        assert!((r.value - p.powi(-4)).abs() < 1e-15 * p.powi(-4));
    }
    assert_close(&lhs_base_shifted(0.5, 1.0, 1, &cfg()).unwrap(), 0.85358153703118403189, 1e-10);
}

#[test]
fn alt_examples() {
    assert_close(&lhs_alt(0, 1, &cfg()).unwrap(), -ZETA2, 1e-10);
    assert_close(&lhs_alt(1, 1, &cfg()).unwrap(), 2.0 - ZETA2, 1e-10);
    assert_close(&lhs_alt(1, 2, &cfg()).unwrap(), 0.15300902999217927813, 1e-10);
}

#[test]
fn variant3_family_examples() {
    assert_close(&lhs_variant3(1.0, 0, 0, &cfg()).unwrap(), 1.0, 1e-10);
    assert_close(&lhs_variant3h(1.0, 0, 0, &cfg()).unwrap(), 1.0, 1e-10);
    assert_close(&lhs_variant4(1.0, 0, 1, &cfg()).unwrap(), 2.0, 1e-10);
    assert_close(&lhs_variant3h(-0.5, 0, 0, &cfg()).unwrap(), 1.3680560780236471743, 1e-10);
    assert_close(&lhs_variant3h(-0.5, 0, 1, &cfg()).unwrap(), 0.41050756047279255735, 1e-10);
    assert!(lhs_variant3(-1.0, 0, 0, &cfg()).is_err());
    // the p·Σ 1/(k(p+k)) = γ + ψ(p+1) form
    for &p in &[0.5, 1.0, 1.5, 2.5] {
        let want = eulersum::special_fn::extended_harmonic(p, 1).unwrap();
        assert_close(&lhs_variant3(p, 0, 0, &cfg()).unwrap().scaled(p), want, 1e-10);
    }
}

#[test]
fn central_binomial_examples() {
    assert_close(&lhs_central_binom(1.0, 0, &cfg()).unwrap(), -4.0, 1e-10);
    let want = -PI * (4.0 * LN_2 * LN_2 - PI * PI / 6.0);
    assert_close(&lhs_central_binom(0.5, 1, &cfg()).unwrap(), want, 1e-10);
    assert_close(&lhs_central_binom(2.0, 0, &cfg()).unwrap(), -32.0 / 9.0, 1e-10);
    assert!(lhs_central_binom(0.0, 0, &cfg()).is_err());
}

#[test]
fn euler_sums() {
    assert_close(&lhs_linear_euler(2, 2, &cfg()).unwrap(), 1.75 * ZETA4, 1e-10);
    assert_close(&lhs_quadratic_euler(2, &cfg()).unwrap(), 4.25 * ZETA4, 1e-10);
    assert_close(&lhs_linear_euler(1, 2, &cfg()).unwrap(), 2.0 * ZETA3, 1e-10);
    assert!(lhs_linear_euler(1, 1, &cfg()).is_err());
}

#[test]
fn euler_sum_symmetry() {
    for &(p, q) in &[(2u32, 3u32), (2, 4), (3, 4)] {
        let s = lhs_linear_euler(p, q, &cfg()).unwrap().value + lhs_linear_euler(q, p, &cfg()).unwrap().value;
        let want = zeta(p) * zeta(q) + zeta(p + q);
        assert!((s - want).abs() < 1e-8 * want, "({p}, {q})");
    }
}

#[test]
fn oracle_is_deterministic() {
    let a = lhs_variant2(1, 2, &cfg()).unwrap();
    let b = lhs_variant2(1, 2, &cfg()).unwrap();
    assert_eq!(a.value.to_bits(), b.value.to_bits());
    assert_eq!(a, b);
}

#[test]
fn partial_sums_stay_below_value_plus_tail() {
    let r = lhs_variant1(0, 1, &cfg()).unwrap();
    let mut h = 0.0;
    let mut s = 0.0;
    let mut last = 0.0;
    for k in 0..200_000u64 {
        if k > 0 {
            h += 1.0 / k as f64;
        }
        s += h / ((k + 1) as f64).powi(2);
        assert!(s >= last);
        last = s;
    }
    assert!(s <= r.value + r.tail_estimate);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn positive_families_bounded_by_value(n in 0u64..4, m in 1u32..4, p in 0.25f64..3.0) {
        let quick = EvalConfig { em_start: 2000, ..cfg() };
        let r = lhs_variant3h(p, 2 * n, m, &quick).unwrap();
        let mut s = 0.0;
        let mut h = 0.0;
        let mut b = 1.0;
        let nn = 2 * n;
        for k in 1..5000u64 {
            b *= (nn + k) as f64 / k as f64;
            s += h / (k as f64 * (p + (nn + k) as f64).powi(m as i32 + 1) * b);
            h += 1.0 / k as f64;
        }
        prop_assert!(s <= r.value + r.tail_estimate + 1e-15);
        let full = lhs_variant3h(p, 2 * n, m, &cfg()).unwrap();
        prop_assert!((full.value - r.value).abs() <= 1e-10 * full.value.abs());
    }
}
