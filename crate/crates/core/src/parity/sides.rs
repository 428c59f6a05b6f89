//! Left- and right-hand sides of the parity identities.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Zero;

use super::{delta_mzv, delta_reg, require_domain, residual, CheckMode, ParityReport, Routes};
use crate::error::{Error, Result};
use crate::evaluator::{enum_contractions, li, shifted_with, star_with, tilde_with, BaseEval, Plain};
use crate::mathf::{self, TAU};
use crate::numcore::{bernoulli_number, cal_b, BranchSign, CutSet, EvalConfig};
use crate::regul::{RegMode, Regularized};
use crate::wordalg::{ArgVector, Index};

/// Both sides of the plain identity, with the routes used on the left.
#[derive(Debug, Clone, PartialEq)]
pub struct MainSides {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub routes: Routes,
}

fn wrap(m: usize, n: usize, a: u32, b: u32, l: u32) -> impl FnOnce(Error) -> Error {
    move |e| Error::Term {
        m,
        n,
        a,
        b,
        l,
        source: alloc::boxed::Box::new(e),
    }
}

fn check_depth(k: &Index, z: &ArgVector) -> Result<()> {
    if k.depth() != z.len() {
        return Err(Error::DepthMismatch {
            index: k.depth(),
            args: z.len(),
        });
    }
    Ok(())
}

/// Lazily filled per-`(m, n)` table of factor values.
struct Memo(Vec<Option<Complex64>>);

impl Memo {
    fn new(len: usize) -> Self {
        Memo(vec![None; len])
    }

    fn get(&mut self, i: usize, f: impl FnOnce() -> Result<Complex64>) -> Result<Complex64> {
        if let Some(v) = self.0[i] {
            return Ok(v);
        }
        let v = f()?;
        self.0[i] = Some(v);
        Ok(v)
    }
}

/// Inner `(a, b, l)` sum of `R^n` at absolute position `n` inside the block
/// `k[m..]`, `z[m..]`; `(m, n)` only label errors.
fn inner_sum<B: BaseEval + ?Sized>(
    base: &B,
    branch: BranchSign,
    k: &Index,
    z: &ArgVector,
    m: usize,
    n: usize,
) -> Result<Complex64> {
    let d = k.depth();
    let kn = k.parts()[n - 1];
    let zb = z.range_product(m, d).value();
    let (kt, zt) = (k.slice(m, n - 1), z.slice(m, n - 1));
    let (ks, zs) = (k.slice(n, d), z.slice(n, d).reciprocal());
    let mut tilde = Memo::new(kn as usize + 1);
    let mut shift = Memo::new(kn as usize + 1);
    let mut inner = Complex64::zero();
    for a in 0..=kn {
        for b in 0..=kn - a {
            let l = kn - a - b;
            let err = wrap(m, n, a, b, l);
            let term = (|| {
                let bl = cal_b(l as usize, zb, branch)?;
                let t = tilde.get(a as usize, || tilde_with(base, a as i64, &kt, &zt))?;
                let s = shift.get(b as usize, || shifted_with(base, b, &ks, &zs))?;
                Ok(bl * t * s * mathf::sign(b as usize))
            })()
            .map_err(err)?;
            inner += term;
        }
    }
    Ok(inner)
}

/// `Σ_{m<n} (−1)^{m+|k_{n+1,d}|} Li^⋆_{k_{1,m}} · [inner (a, b, l) sum]`,
/// enumerated lexicographically in `(m, n, a, b, l)`.
fn triple_sum<B: BaseEval + ?Sized>(
    base: &B,
    branch: BranchSign,
    k: &Index,
    z: &ArgVector,
) -> Result<Complex64> {
    let d = k.depth();
    let mut total = Complex64::zero();
    for m in 0..d {
        let star = star_with(base, &k.slice(0, m), &z.slice(0, m)).map_err(wrap(m, m + 1, 0, 0, 0))?;
        for n in m + 1..=d {
            let sign = mathf::sign(m + k.slice(n, d).weight() as usize);
            total += star * inner_sum(base, branch, k, z, m, n)? * sign;
        }
    }
    Ok(total)
}

/// `R^n_k(z)` for `1 <= n <= d`.
pub fn r_term<B: BaseEval + ?Sized>(
    base: &B,
    n: usize,
    k: &Index,
    z: &ArgVector,
    branch: BranchSign,
) -> Result<Complex64> {
    check_depth(k, z)?;
    if n == 0 || n > k.depth() {
        return Err(Error::Internal("R^n needs 1 <= n <= depth"));
    }
    inner_sum(base, branch, k, z, 0, n)
}

/// Right-hand side rebuilt as `Σ_m (−1)^{m+|k_{n+1,d}|} Li^⋆_{k_{1,m}} R^{n−m}_{k_{m+1,d}}`.
pub fn main_rhs_regrouped<B: BaseEval + ?Sized>(
    base: &B,
    k: &Index,
    z: &ArgVector,
    branch: BranchSign,
) -> Result<Complex64> {
    check_depth(k, z)?;
    let d = k.depth();
    let mut total = Complex64::zero();
    for m in 0..d {
        let star = star_with(base, &k.slice(0, m), &z.slice(0, m))?;
        let (kr, zr) = (k.slice(m, d), z.slice(m, d));
        for n in m + 1..=d {
            let sign = mathf::sign(m + k.slice(n, d).weight() as usize);
            total += star * r_term(base, n - m, &kr, &zr, branch)? * sign;
        }
    }
    Ok(total)
}

/// Plain identity on `D(ℝ_{≥0})`: `(−1)^d Li^⋆_k(z) − (−1)^{|k|} Li_k(1/z)`
/// against the `(m, n, a, b, l)` sum.
pub fn main_sides(k: &Index, z: &ArgVector, cfg: &EvalConfig) -> Result<MainSides> {
    check_depth(k, z)?;
    require_domain(z, CutSet::NonNegReal)?;
    let d = k.depth();
    let mut routes = Routes::default();
    let mut star = Complex64::zero();
    for (kc, zc) in enum_contractions(k, z)? {
        let r = li(&kc, &zc, cfg)?;
        routes.direct.push(r.method);
        star += r.value;
    }
    let inv = li(k, &z.reciprocal(), cfg)?;
    routes.inverse.push(inv.method);
    let lhs = star * mathf::sign(d) - inv.value * mathf::sign(k.weight() as usize);
    let rhs = triple_sum(&Plain(cfg), cfg.branch_at_one, k, z)?;
    Ok(MainSides { lhs, rhs, routes })
}

/// [`main_sides`] packaged as a report.
pub fn main_report(k: &Index, z: &ArgVector, cfg: &EvalConfig) -> Result<ParityReport> {
    let s = main_sides(k, z, cfg)?;
    Ok(ParityReport {
        k: k.clone(),
        z: z.clone(),
        lhs: s.lhs,
        rhs: s.rhs,
        residual: residual(s.lhs, s.rhs),
        branch_at_one: cfg.branch_at_one,
        mode: CheckMode::Plain,
        routes: Some(s.routes),
    })
}

/// Regularized identity on `D(ℝ_{≥0} ∖ {1})`, including the `δ` correction.
pub fn reg_sides(k: &Index, z: &ArgVector, mode: RegMode, cfg: &EvalConfig) -> Result<ParityReport> {
    check_depth(k, z)?;
    require_domain(z, CutSet::NonNegRealExceptOne)?;
    let d = k.depth();
    let base = Regularized { cfg, mode };
    let lhs = star_with(&base, k, z)? * mathf::sign(d)
        - base.base(k, &z.reciprocal())? * mathf::sign(k.weight() as usize);
    let mut correction = Complex64::zero();
    for m in 0..d {
        let delta = delta_reg(&k.slice(m, d), &z.slice(m, d), cfg)?;
        if delta.is_zero() {
            continue;
        }
        correction += star_with(&base, &k.slice(0, m), &z.slice(0, m))? * delta * mathf::sign(m);
    }
    let rhs = triple_sum(&base, cfg.branch_at_one, k, z)? - correction;
    Ok(ParityReport {
        k: k.clone(),
        z: z.clone(),
        lhs,
        rhs,
        residual: residual(lhs, rhs),
        branch_at_one: cfg.branch_at_one,
        mode: mode.into(),
        routes: None,
    })
}

/// `(−1)^d ζ^{⋆,*}(k) − (−1)^{|k|} ζ^*(k)`.
pub fn zeta_lhs(k: &Index, cfg: &EvalConfig) -> Result<Complex64> {
    let base = Regularized {
        cfg,
        mode: RegMode::Stuffle,
    };
    let ones = ArgVector::ones(k.depth());
    Ok(star_with(&base, k, &ones)? * mathf::sign(k.depth())
        - base.base(k, &ones)? * mathf::sign(k.weight() as usize))
}

/// Right-hand side for stuffle-regularized values at `z = ({1}^d)`, built
/// from even Bernoulli numbers and `δ` alone.
pub fn zeta_rhs(k: &Index, cfg: &EvalConfig) -> Result<Complex64> {
    let base = Regularized {
        cfg,
        mode: RegMode::Stuffle,
    };
    let d = k.depth();
    let ones = |len: usize| ArgVector::ones(len);
    let zstar = |kk: &Index| star_with(&base, kk, &ones(kk.depth()));
    let mut total = Complex64::zero();
    for m in 0..d {
        let delta = delta_mzv(&k.slice(m, d));
        if !delta.is_zero() {
            total -= zstar(&k.slice(0, m))? * delta * mathf::sign(m);
        }
    }
    for m in 0..d {
        let star = zstar(&k.slice(0, m)).map_err(wrap(m, m + 1, 0, 0, 0))?;
        for n in m + 1..=d {
            let kn = k.parts()[n - 1];
            let left = k.slice(m, n - 1).reversed();
            let right = k.slice(n, d);
            let sign_mn = m + right.weight() as usize;
            for a in 0..=kn {
                for b in 0..=kn - a {
                    let rest = kn - a - b;
                    if rest % 2 == 1 {
                        continue;
                    }
                    let l = rest / 2;
                    let term = (|| {
                        let b2l = bernoulli_number(2 * l as usize)
                            .ok_or(Error::Internal("Bernoulli index out of range"))?;
                        let c = mathf::powi(TAU, 2 * l as i32) * mathf::ratio_to_f64(b2l)
                            / mathf::factorial(2 * l);
                        let za = shifted_with(&base, a, &left, &ones(left.depth()))?;
                        let zb = shifted_with(&base, b, &right, &ones(right.depth()))?;
                        Ok(star * za * zb * c * mathf::sign(sign_mn + (b + l) as usize))
                    })()
                    .map_err(wrap(m, n, a, b, l))?;
                    total += term;
                }
            }
        }
    }
    Ok(total)
}

/// Both sides of the zeta-value identity packaged as a report.
pub fn zeta_report(k: &Index, cfg: &EvalConfig) -> Result<ParityReport> {
    let lhs = zeta_lhs(k, cfg)?;
    let rhs = zeta_rhs(k, cfg)?;
    Ok(ParityReport {
        k: k.clone(),
        z: ArgVector::ones(k.depth()),
        lhs,
        rhs,
        residual: residual(lhs, rhs),
        branch_at_one: cfg.branch_at_one,
        mode: CheckMode::Stuffle,
        routes: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mathf::PI;

    fn idx(k: &[u32]) -> Index {
        Index::from_slice(k).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn depth_one_weight_two_at_minus_two() {
        let cfg = EvalConfig::default();
        let z = ArgVector::from_values(&[c(-2.0, 0.0)]);
        let s = main_sides(&idx(&[2]), &z, &cfg).unwrap();
        // lhs = −(Li₂(−2) + Li₂(−1/2)) = π²/6 + log²2 / 2
        assert!((s.lhs.re - 1.8851606).abs() < 1e-7, "{}", s.lhs);
        assert!(s.lhs.im.abs() < 1e-12);
        assert!(residual(s.lhs, s.rhs) < 1e-12);
    }

    #[test]
    fn depth_two_generic_point() {
        let cfg = EvalConfig::default();
        let z = ArgVector::from_values(&[c(0.3, 0.7), c(-1.2, 0.4)]);
        for k in [[1, 1], [2, 1], [1, 2], [2, 3]] {
            let s = main_sides(&idx(&k), &z, &cfg).unwrap();
            assert!(residual(s.lhs, s.rhs) < 1e-10, "k={k:?}: {} vs {}", s.lhs, s.rhs);
        }
    }

    #[test]
    fn depth_two_imaginary_axis() {
        let cfg = EvalConfig::default();
        let z = ArgVector::from_values(&[c(0.0, 2.0), c(0.0, 3.0)]);
        let s = main_sides(&idx(&[1, 1]), &z, &cfg).unwrap();
        assert!(residual(s.lhs, s.rhs) < 1e-8);
    }

    #[test]
    fn regrouping_is_exact() {
        let cfg = EvalConfig::default();
        let z = ArgVector::from_values(&[c(0.5, -0.6), c(-0.8, 0.1), c(0.2, 1.1)]);
        let k = idx(&[2, 1, 1]);
        let base = Plain(&cfg);
        let direct = triple_sum(&base, cfg.branch_at_one, &k, &z).unwrap();
        let regrouped = main_rhs_regrouped(&base, &k, &z, cfg.branch_at_one).unwrap();
        assert_eq!(direct, regrouped);
    }

    #[test]
    fn r_term_depth_one() {
        let cfg = EvalConfig::default();
        let w = c(-0.4, 0.9);
        let z = ArgVector::from_values(&[w]);
        let r = r_term(&Plain(&cfg), 1, &idx(&[1]), &z, cfg.branch_at_one).unwrap();
        assert!((r - cal_b(1, w, cfg.branch_at_one).unwrap()).norm() < 1e-15);
    }

    #[test]
    fn domain_rejected() {
        let cfg = EvalConfig::default();
        let z = ArgVector::from_values(&[c(-2.0, 0.0), c(-0.5, 0.0)]);
        assert_eq!(
            main_sides(&idx(&[1, 1]), &z, &cfg).unwrap_err(),
            Error::Domain { i: 1, j: 2 }
        );
    }

    #[test]
    fn regularized_depth_one_at_minus_one() {
        let cfg = EvalConfig::default();
        let z = ArgVector::from_values(&[c(-1.0, 0.0)]);
        for mode in [RegMode::Stuffle, RegMode::Shuffle] {
            let r = reg_sides(&idx(&[1]), &z, mode, &cfg).unwrap();
            assert!(r.lhs.norm() < 1e-14 && r.rhs.norm() < 1e-14, "{} {}", r.lhs, r.rhs);
        }
    }

    #[test]
    fn regularized_at_ones_both_branches() {
        for b in [BranchSign::Plus, BranchSign::Minus] {
            let cfg = EvalConfig::default().with_branch(b);
            for k in [&[1u32, 1][..], &[2, 1], &[1, 2], &[1, 1, 1]] {
                let k = idx(k);
                let z = ArgVector::ones(k.depth());
                for mode in [RegMode::Stuffle, RegMode::Shuffle] {
                    let r = reg_sides(&k, &z, mode, &cfg).unwrap();
                    assert!(r.residual < 1e-10, "{k} {mode:?} {b:?}: {} vs {}", r.lhs, r.rhs);
                }
            }
        }
    }

    #[test]
    fn zeta_depth_one() {
        let cfg = EvalConfig::default();
        let k = idx(&[2]);
        let expect = -PI * PI / 3.0;
        assert!((zeta_lhs(&k, &cfg).unwrap().re - expect).abs() < 1e-13);
        assert!((zeta_rhs(&k, &cfg).unwrap().re - expect).abs() < 1e-13);
    }

    #[test]
    fn zeta_small_indices() {
        let cfg = EvalConfig::default();
        for k in [&[1u32, 1][..], &[2, 1], &[1, 2], &[3, 1], &[2, 2], &[1, 1, 1], &[2, 1, 1]] {
            let r = zeta_report(&idx(k), &cfg).unwrap();
            assert!(r.residual < 1e-10, "{:?}: {} vs {}", k, r.lhs, r.rhs);
        }
    }
}
