//! Product homomorphisms, the reversal identity, the ρ relation between the
//! two regularizations, and branch independence of the regularized identity.

use mpl_core::evaluator::{li, li_a, li_tilde_a, li_word};
use mpl_core::numcore::{BranchSign, EvalConfig};
use mpl_core::parity::{main_sides, reg_sides, residual};
use mpl_core::regul::{reg_poly, reg_poly_stuffle_direct, RegMode, RhoMap};
use mpl_core::wordalg::{iota, shuffle, stuffle, word_from_index, ArgSymbol, ArgVector, Index, LinComb};
use mpl_core::Complex64;
use proptest::prelude::*;

fn point(max_depth: usize, rmin: f64, rmax: f64) -> impl Strategy<Value = (Index, ArgVector)> {
    (1..=max_depth)
        .prop_flat_map(move |d| {
            (
                prop::collection::vec(1u32..=2, d),
                prop::collection::vec((rmin..rmax, 0.2f64..6.08), d),
            )
        })
        .prop_map(|(k, z)| {
            let z: Vec<Complex64> = z.into_iter().map(|(r, t)| Complex64::from_polar(r, t)).collect();
            (Index::new(k).unwrap(), ArgVector::from_values(&z))
        })
}

/// Relabels slots so two independently drawn points do not share symbols.
fn relabel(z: &ArgVector, offset: u32) -> ArgVector {
    ArgVector::new(
        z.values()
            .iter()
            .enumerate()
            .map(|(i, &v)| ArgSymbol::slot(offset + i as u32, v))
            .collect(),
    )
}

fn iota_lc(w: &LinComb) -> LinComb {
    w.iter().map(|(x, c)| (iota(x).unwrap(), *c)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn shuffle_is_multiplicative((k1, z1) in point(2, 0.2, 0.7), (k2, z2) in point(2, 0.2, 0.7)) {
        let cfg = EvalConfig::default();
        // words in tail letters are integrand words
        let u = LinComb::word(iota(&word_from_index(&k1, &z1).unwrap()).unwrap());
        let v = LinComb::word(iota(&word_from_index(&k2, &relabel(&z2, 10)).unwrap()).unwrap());
        let prod = li_word(&shuffle(&u, &v), &cfg).unwrap();
        let expect = li_word(&u, &cfg).unwrap() * li_word(&v, &cfg).unwrap();
        prop_assert!(residual(prod, expect) < 1e-12, "{prod} vs {expect}");
    }

    #[test]
    fn stuffle_is_multiplicative((k1, z1) in point(2, 0.2, 0.7), (k2, z2) in point(2, 0.2, 0.7)) {
        let cfg = EvalConfig::default();
        let z2 = relabel(&z2, 10);
        let u = LinComb::word(word_from_index(&k1, &z1).unwrap());
        let v = LinComb::word(word_from_index(&k2, &z2).unwrap());
        let prod = li_word(&iota_lc(&stuffle(&u, &v).unwrap()), &cfg).unwrap();
        let expect = li(&k1, &z1, &cfg).unwrap().value * li(&k2, &z2, &cfg).unwrap().value;
        prop_assert!(residual(prod, expect) < 1e-12, "{prod} vs {expect}");
    }

    #[test]
    fn tilde_equals_reversed_shift((k, z) in point(3, 0.2, 0.6), a in 0u32..=2) {
        let cfg = EvalConfig::default();
        let t = li_tilde_a(a as i64, &k, &z, &cfg).unwrap();
        let r = li_a(a, &k.reversed(), &z.reversed(), &cfg).unwrap();
        prop_assert!(residual(t, r) < 1e-12, "{t} vs {r}");
    }

    #[test]
    fn plain_identity_holds((k, z) in point(2, 0.5, 2.0)) {
        let cfg = EvalConfig::default();
        prop_assume!(mpl_core::numcore::domain_check(
            &z, mpl_core::numcore::DomainFamily::All, mpl_core::numcore::CutSet::NonNegReal).is_ok());
        let s = main_sides(&k, &z, &cfg).unwrap();
        prop_assert!(residual(s.lhs, s.rhs) < 1e-9, "{} vs {}", s.lhs, s.rhs);
    }

    #[test]
    fn regularized_identity_is_branch_free(k1 in 1u32..=3, r in 0.4f64..2.5, t in 0.3f64..5.98) {
        let k = Index::new(vec![k1, 1]).unwrap();
        let z = ArgVector::new(vec![ArgSymbol::slot(0, Complex64::from_polar(r, t)), ArgSymbol::one()]);
        for mode in [RegMode::Stuffle, RegMode::Shuffle] {
            let plus = reg_sides(&k, &z, mode, &EvalConfig::default().with_branch(BranchSign::Plus)).unwrap();
            let minus = reg_sides(&k, &z, mode, &EvalConfig::default().with_branch(BranchSign::Minus)).unwrap();
            prop_assert!(plus.residual < 1e-9 && minus.residual < 1e-9);
            prop_assert!(residual(plus.rhs, minus.rhs) < 1e-9);
            prop_assert!(residual(plus.lhs, minus.lhs) < 1e-12);
        }
    }
}

#[test]
fn rho_relates_regularizations_at_cube_roots() {
    let cfg = EvalConfig::default();
    let rho = RhoMap::global();
    for k in [&[1u32, 1][..], &[2, 1], &[1, 1, 1], &[2, 1, 1], &[1, 2, 1]] {
        let k = Index::from_slice(k).unwrap();
        let d = k.depth();
        let mut roots = vec![(3u32, 1i64)];
        roots.extend(std::iter::repeat_n((1, 0), d - 1));
        let z = ArgVector::roots_of_unity(&roots);
        let sh = reg_poly(&k, &z, RegMode::Shuffle, &cfg).unwrap();
        let st = reg_poly_stuffle_direct(&k, &z, &cfg).unwrap();
        let mapped = rho.apply(&st).unwrap();
        assert!(sh.max_abs_diff(&mapped) < 1e-10, "k={k}");
        assert!(reg_poly(&k, &z, RegMode::Stuffle, &cfg).unwrap().max_abs_diff(&st) < 1e-10);
    }
}
