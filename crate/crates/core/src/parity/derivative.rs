//! Finite-difference checks of the `∂/∂z_1` formulas for both sides of the
//! plain identity and for each `R^n`.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Zero;

use super::residual;
use super::sides::{main_sides, r_term};
use crate::error::{Error, Result};
use crate::evaluator::{li, Plain};
use crate::mathf;
use crate::numcore::EvalConfig;
use crate::wordalg::{ArgVector, Index};

/// Central difference against the closed-form derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdCheck {
    pub fd: Complex64,
    pub formula: Complex64,
    /// `|fd − formula| / max(1, |fd|, |formula|)`
    pub residual: f64,
}

impl FdCheck {
    fn new(fd: Complex64, formula: Complex64) -> Self {
        Self {
            fd,
            formula,
            residual: residual(fd, formula),
        }
    }
}

/// Derivative check of `R^n_k(z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RCheck {
    pub n: usize,
    pub check: FdCheck,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DerivativeReport {
    pub k: Index,
    pub z: ArgVector,
    pub lhs: FdCheck,
    pub rhs: FdCheck,
    pub r: Vec<RCheck>,
}

impl DerivativeReport {
    pub fn max_residual(&self) -> f64 {
        self.r
            .iter()
            .map(|c| c.check.residual)
            .fold(self.lhs.residual.max(self.rhs.residual), f64::max)
    }
}

fn with_first(z: &ArgVector, w: Complex64) -> ArgVector {
    let mut v = z.values();
    v[0] = w;
    ArgVector::from_values(&v)
}

/// Both sides; the empty index gives `(0, 0)`.
fn sides(k: &Index, z: &ArgVector, cfg: &EvalConfig) -> Result<(Complex64, Complex64)> {
    if k.is_empty() {
        return Ok((Complex64::zero(), Complex64::zero()));
    }
    let s = main_sides(k, z, cfg)?;
    Ok((s.lhs, s.rhs))
}

fn central<F>(z: &ArgVector, h: f64, f: F) -> Result<Complex64>
where
    F: Fn(&ArgVector) -> Result<Complex64>,
{
    let z1 = z.get(0).value();
    let up = f(&with_first(z, z1 + h))?;
    let down = f(&with_first(z, z1 - h))?;
    Ok((up - down) / (2.0 * h))
}

/// Compares central differences in `z_1` (step `cfg.fd_step`) with the
/// closed-form derivatives of both sides and of every `R^n_k`.
pub fn check_derivative(k: &Index, z: &ArgVector, cfg: &EvalConfig) -> Result<DerivativeReport> {
    let d = k.depth();
    if d == 0 || d != z.len() {
        return Err(Error::DepthMismatch {
            index: d,
            args: z.len(),
        });
    }
    let h = cfg.fd_step;
    let z1 = z.get(0).value();
    if z1.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let branch = cfg.branch_at_one;
    let base = Plain(cfg);

    let fd_lhs = central(z, h, |w| Ok(main_sides(k, w, cfg)?.lhs))?;
    let fd_rhs = central(z, h, |w| Ok(main_sides(k, w, cfg)?.rhs))?;

    let (lhs_formula, rhs_formula) = match k.decrement_first() {
        Some(km) => {
            let (p, q) = sides(&km, z, cfg)?;
            (p / z1, q / z1)
        }
        None => {
            let (kt, zt) = (k.slice(1, d), z.slice(1, d));
            let (pm, qm) = if d >= 2 {
                sides(&kt, &z.merged_front(), cfg)?
            } else {
                (Complex64::zero(), Complex64::zero())
            };
            let (pt, qt) = sides(&kt, &zt, cfg)?;
            let inv = li(&kt, &zt.reciprocal(), cfg)?.value * mathf::sign(kt.weight() as usize);
            let one = Complex64::new(1.0, 0.0);
            ((pm - pt) / (one - z1) + inv / z1, (qm - qt) / (one - z1) + inv / z1)
        }
    };

    let mut r = Vec::with_capacity(d);
    for n in 1..=d {
        let fd = central(z, h, |w| r_term(&base, n, k, w, branch))?;
        let formula = match k.decrement_first() {
            Some(km) => r_term(&base, n, &km, z, branch)? / z1,
            None if n == 1 => li(&k.slice(1, d), &z.slice(1, d).reciprocal(), cfg)?.value / z1,
            None => {
                r_term(&base, n - 1, &k.slice(1, d), &z.merged_front(), branch)?
                    / (Complex64::new(1.0, 0.0) - z1)
            }
        };
        r.push(RCheck {
            n,
            check: FdCheck::new(fd, formula),
        });
    }

    Ok(DerivativeReport {
        k: k.clone(),
        z: z.clone(),
        lhs: FdCheck::new(fd_lhs, lhs_formula),
        rhs: FdCheck::new(fd_rhs, rhs_formula),
        r,
    })
}
