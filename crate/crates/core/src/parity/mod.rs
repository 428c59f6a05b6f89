//! Both sides of the explicit parity identities and the auxiliary checks
//! (derivatives in `z_1`, the `z_1 → 0` limit) used to validate them.

mod derivative;
mod probe;
mod sides;

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::evaluator::Method;
use crate::mathf;
use crate::numcore::{domain_check, log_minus, BranchSign, CutSet, DomainFamily, EvalConfig};
use crate::regul::RegMode;
use crate::wordalg::{ArgVector, Index};

pub use derivative::{check_derivative, DerivativeReport, RCheck};
pub use probe::small_z1_limit_probe;
pub use sides::{
    zeta_lhs, zeta_report, zeta_rhs, main_report, main_rhs_regrouped, main_sides, r_term,
    reg_sides, MainSides,
};

/// Which values enter a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum CheckMode {
    Plain,
    Stuffle,
    Shuffle,
}

impl CheckMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckMode::Plain => "plain",
            CheckMode::Stuffle => "stuffle",
            CheckMode::Shuffle => "shuffle",
        }
    }

    pub fn reg_mode(self) -> Option<RegMode> {
        match self {
            CheckMode::Plain => None,
            CheckMode::Stuffle => Some(RegMode::Stuffle),
            CheckMode::Shuffle => Some(RegMode::Shuffle),
        }
    }
}

impl From<RegMode> for CheckMode {
    fn from(m: RegMode) -> Self {
        match m {
            RegMode::Stuffle => CheckMode::Stuffle,
            RegMode::Shuffle => CheckMode::Shuffle,
        }
    }
}

/// Evaluation routes taken by the two halves of a left-hand side.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Routes {
    /// `Li^⋆_k(z)` contraction terms
    pub direct: Vec<Method>,
    /// `Li_k(1/z)`
    pub inverse: Vec<Method>,
}

impl Routes {
    /// True when no method is shared between the two halves.
    pub fn independent(&self) -> bool {
        !self.direct.iter().any(|m| self.inverse.contains(m))
    }
}

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq)]
pub struct ParityReport {
    pub k: Index,
    pub z: ArgVector,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub residual: f64,
    pub branch_at_one: BranchSign,
    pub mode: CheckMode,
    pub routes: Option<Routes>,
}

/// `|lhs − rhs| / max(1, |lhs|, |rhs|)`.
pub fn residual(lhs: Complex64, rhs: Complex64) -> f64 {
    (lhs - rhs).norm() / 1.0f64.max(lhs.norm()).max(rhs.norm())
}

/// `(log(−z_d))^d / d!` when `k = z = ({1}^d)`, zero otherwise.
pub fn delta_reg(k: &Index, z: &ArgVector, cfg: &EvalConfig) -> Result<Complex64> {
    let d = k.depth();
    if d == 0 || !k.is_all_ones() || !z.is_all_ones() {
        return Ok(Complex64::zero());
    }
    let l = log_minus(z.get(d - 1).value(), cfg.branch_at_one)?;
    Ok(l.powu(d as u32) / mathf::factorial(d as u32))
}

/// `(−1)^{d/2} π^d / d!` when `k = ({1}^d)` with even `d`, zero otherwise.
pub fn delta_mzv(k: &Index) -> Complex64 {
    let d = k.depth();
    if d == 0 || d % 2 == 1 || !k.is_all_ones() {
        return Complex64::zero();
    }
    let v = mathf::sign(d / 2) * mathf::powi(mathf::PI, d as i32) / mathf::factorial(d as u32);
    Complex64::new(v, 0.0)
}

fn require_domain(z: &ArgVector, set: CutSet) -> Result<()> {
    match domain_check(z, DomainFamily::All, set).first() {
        Some((i, j)) => Err(Error::Domain { i, j }),
        None => Ok(()),
    }
}
