//! Evaluator values against independent brute-force sums and classical
//! closed forms.

use std::f64::consts::{LN_2, PI, TAU};

use mpl_core::evaluator::{li, li_panels, li_series, Method};
use mpl_core::numcore::{zeta_const, EvalConfig};
use mpl_core::wordalg::{ArgVector, Index};
use mpl_core::{Complex64, Error};
use proptest::prelude::*;

const ZETA3: f64 = 1.202_056_903_159_594_2;
const CATALAN: f64 = 0.915_965_594_177_219;

fn idx(k: &[u32]) -> Index {
    Index::from_slice(k).unwrap()
}

fn args(z: &[Complex64]) -> ArgVector {
    ArgVector::from_values(z)
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `Σ_{0<m1<m2<=n} z1^m1 z2^m2 / (m1^k1 m2^k2)`, summed over `m2` with a
/// running inner sum.
fn brute_depth_two(k: [i32; 2], z: [Complex64; 2], n: usize) -> Complex64 {
    let mut inner = c(0.0, 0.0);
    let mut total = c(0.0, 0.0);
    let (mut p1, mut p2) = (c(1.0, 0.0), c(1.0, 0.0));
    for m in 1..=n {
        p2 *= z[1];
        total += inner * p2 / (m as f64).powi(k[1]);
        p1 *= z[0];
        inner += p1 / (m as f64).powi(k[0]);
    }
    total
}

fn brute_depth_one(k: i32, z: Complex64, n: usize) -> Complex64 {
    let mut p = c(1.0, 0.0);
    let mut total = c(0.0, 0.0);
    for m in 1..=n {
        p *= z;
        total += p / (m as f64).powi(k);
    }
    total
}

fn both_routes(k: &Index, z: &ArgVector, cfg: &EvalConfig) -> (Complex64, Complex64) {
    (li_series(k, z, cfg).unwrap().value, li_panels(k, z, cfg).unwrap().value)
}

#[test]
fn depth_two_double_sum() {
    let cfg = EvalConfig::default();
    let oracle = brute_depth_two([1, 1], [c(0.3, 0.0), c(0.4, 0.0)], 2000);
    let (s, p) = both_routes(&idx(&[1, 1]), &args(&[c(0.3, 0.0), c(0.4, 0.0)]), &cfg);
    assert!((s - oracle).norm() < 1e-14, "{s} vs {oracle}");
    assert!((p - oracle).norm() < 1e-13, "{p} vs {oracle}");
}

#[test]
fn zeta_values_through_the_endpoint() {
    let cfg = EvalConfig::default();
    let z3 = li(&idx(&[1, 2]), &ArgVector::ones(2), &cfg).unwrap();
    assert_eq!(z3.method, Method::Panels);
    assert!((z3.value.re - ZETA3).abs() < 1e-12);
    let z22 = li(&idx(&[2, 2]), &ArgVector::ones(2), &cfg).unwrap().value;
    assert!((z22.re - PI.powi(4) / 120.0).abs() < 1e-12);
    assert!((zeta_const(3).unwrap() - ZETA3).abs() < 1e-15);
}

#[test]
fn classical_polylog_values() {
    let cfg = EvalConfig::default();
    let eval = |k: u32, z: Complex64| li(&idx(&[k]), &args(&[z]), &cfg).unwrap().value;
    let li2_half = PI * PI / 12.0 - LN_2 * LN_2 / 2.0;
    assert!((eval(2, c(0.5, 0.0)) - li2_half).norm() < 1e-14);
    assert!((eval(2, c(-1.0, 0.0)) + PI * PI / 12.0).norm() < 1e-13);
    let li3_half = 7.0 / 8.0 * ZETA3 - PI * PI * LN_2 / 12.0 + LN_2.powi(3) / 6.0;
    assert!((eval(3, c(0.5, 0.0)) - li3_half).norm() < 1e-14);
    assert!((eval(2, c(0.0, 1.0)) - c(-PI * PI / 48.0, CATALAN)).norm() < 1e-13);
    // Li₁(z) = −log(1 − z) off the unit disc
    let z = c(-2.5, 1.5);
    assert!((eval(1, z) + (c(1.0, 0.0) - z).ln()).norm() < 1e-13);
}

#[test]
fn alternating_double_sum() {
    // Σ_{m1<m2} (−1)^{m1+m2}/(m1 m2) = (log²2 − ζ(2)) / 2
    let cfg = EvalConfig::default();
    let v = li(&idx(&[1, 1]), &args(&[c(-1.0, 0.0), c(-1.0, 0.0)]), &cfg).unwrap().value;
    assert!((v.re - (LN_2 * LN_2 - PI * PI / 6.0) / 2.0).abs() < 1e-13 && v.im.abs() < 1e-13);
}

#[test]
fn divergent_and_singular_inputs() {
    let cfg = EvalConfig::default();
    assert_eq!(li(&idx(&[2, 1]), &ArgVector::ones(2), &cfg).unwrap_err(), Error::Divergent);
    let on_cut = li(&idx(&[2]), &args(&[c(2.0, 0.0)]), &cfg).unwrap_err();
    assert!(matches!(on_cut, Error::SingularityOnPath { .. }), "{on_cut:?}");
    assert_eq!(li(&idx(&[1]), &args(&[c(0.0, 0.0)]), &cfg).unwrap().value, c(0.0, 0.0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Both routes stay within their own error estimates of a brute-force sum.
    #[test]
    fn error_estimates_are_honest(k in 1i32..=4, r in 0.05f64..0.6, theta in 0.0f64..TAU) {
        let cfg = EvalConfig::default();
        let z = Complex64::from_polar(r, theta);
        let oracle = brute_depth_one(k, z, 200);
        let kk = idx(&[k as u32]);
        for res in [li_series(&kk, &args(&[z]), &cfg).unwrap(), li_panels(&kk, &args(&[z]), &cfg).unwrap()] {
            let err = (res.value - oracle).norm();
            prop_assert!(err <= res.est_error + 1e-15, "{:?}: err {err:e} > est {:e}", res.method, res.est_error);
        }
    }

    #[test]
    fn series_matches_double_sum(
        k1 in 1i32..=3, k2 in 1i32..=3,
        r1 in 0.1f64..0.8, t1 in 0.0f64..TAU, r2 in 0.1f64..0.8, t2 in 0.0f64..TAU,
    ) {
        let cfg = EvalConfig::default();
        let z = [Complex64::from_polar(r1, t1), Complex64::from_polar(r2, t2)];
        let oracle = brute_depth_two([k1, k2], z, 400);
        let (s, p) = both_routes(&idx(&[k1 as u32, k2 as u32]), &args(&z), &cfg);
        prop_assert!((s - oracle).norm() < 1e-13);
        prop_assert!((p - oracle).norm() < 1e-12);
    }
}
