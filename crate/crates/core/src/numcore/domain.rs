use alloc::vec::Vec;

use num_complex::Complex64;

use crate::wordalg::ArgVector;

/// Relative tolerance for deciding that a product sits on a real ray.
const CUT_TOL: f64 = 1e-13;

/// Which consecutive products are tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainFamily {
    /// every `z_{i,j}` with `i <= j`
    All,
    /// only the tail products `z_{i,d}`
    Tail,
}

/// Excluded set `S` for the domain predicates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutSet {
    /// `ℝ_{≥0}`
    NonNegReal,
    /// `ℝ_{≥0} ∖ {1}`
    NonNegRealExceptOne,
    /// `ℝ_{>1}`
    RealAboveOne,
    /// `ℝ_{≥1}`
    RealAtLeastOne,
}

/// Outcome of a domain test; `violations` lists 1-based `(i, j)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DomainReport {
    pub violations: Vec<(usize, usize)>,
}

impl DomainReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<(usize, usize)> {
        self.violations.first().copied()
    }
}

pub fn in_cut_set(w: Complex64, set: CutSet) -> bool {
    let scale = w.norm().max(1.0);
    let real = w.im.abs() <= CUT_TOL * scale;
    if !real {
        return false;
    }
    let is_one = (w.re - 1.0).abs() <= CUT_TOL;
    match set {
        CutSet::NonNegReal => w.re >= -CUT_TOL,
        CutSet::NonNegRealExceptOne => w.re >= -CUT_TOL && !is_one,
        CutSet::RealAboveOne => w.re > 1.0 && !is_one,
        CutSet::RealAtLeastOne => w.re >= 1.0 || is_one,
    }
}

/// Tests membership of `z` in `𝒟^d(S)` (family `All`) or `𝒟̃^d(S)` (family `Tail`).
pub fn domain_check(z: &ArgVector, family: DomainFamily, set: CutSet) -> DomainReport {
    let d = z.len();
    let mut violations = Vec::new();
    for i in 0..d {
        let lo_j = match family {
            DomainFamily::All => i,
            DomainFamily::Tail => d - 1,
        };
        for j in lo_j..d {
            let w = z.range_product(i, j + 1).value();
            if in_cut_set(w, set) {
                violations.push((i + 1, j + 1));
            }
        }
    }
    DomainReport { violations }
}
