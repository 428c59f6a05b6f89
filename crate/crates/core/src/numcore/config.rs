use crate::{Error, Result};

/// Choice of `log(-1)` when a `ℬ_l` or `δ` factor is evaluated at exactly 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "i8", into = "i8"))]
pub enum BranchSign {
    /// `log(-1) = +πi`
    #[default]
    Plus,
    /// `log(-1) = -πi`
    Minus,
}

impl BranchSign {
    pub fn sign(self) -> f64 {
        match self {
            BranchSign::Plus => 1.0,
            BranchSign::Minus => -1.0,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            BranchSign::Plus => BranchSign::Minus,
            BranchSign::Minus => BranchSign::Plus,
        }
    }
}

impl TryFrom<i8> for BranchSign {
    type Error = &'static str;

    fn try_from(v: i8) -> core::result::Result<Self, Self::Error> {
        match v {
            1 => Ok(BranchSign::Plus),
            -1 => Ok(BranchSign::Minus),
            _ => Err("branch_at_one must be +1 or -1"),
        }
    }
}

impl From<BranchSign> for i8 {
    fn from(b: BranchSign) -> i8 {
        match b {
            BranchSign::Plus => 1,
            BranchSign::Minus => -1,
        }
    }
}

/// Parameters governing every numeric evaluation.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default, deny_unknown_fields))]
pub struct EvalConfig {
    /// Hard cap on the summation index of truncated series.
    pub series_truncation: usize,
    /// Relative residual below which an identity check passes.
    pub target_tol: f64,
    /// Number of Taylor (or log-Taylor) coefficients per panel.
    pub panel_order: usize,
    /// Panel radius as a fraction of the distance to the nearest singularity.
    pub panel_safety: f64,
    pub branch_at_one: BranchSign,
    pub rng_seed: u64,
    /// Step of the central finite differences used by derivative checks.
    pub fd_step: f64,
    /// Upper bound on the number of panels in one iterated integral.
    pub max_panels: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            series_truncation: 20_000,
            target_tol: 1e-8,
            panel_order: 48,
            panel_safety: 0.4,
            branch_at_one: BranchSign::Plus,
            rng_seed: 0x5eed,
            fd_step: 1e-5,
            max_panels: 20_000,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        // written so that NaN fails every check
        let positive = |x: f64| x > 0.0;
        if !positive(self.target_tol) {
            return Err(Error::Config("target_tol must be positive"));
        }
        if !(positive(self.panel_safety) && self.panel_safety < 1.0) {
            return Err(Error::Config("panel_safety must lie in (0, 1)"));
        }
        if self.panel_order < 4 {
            return Err(Error::Config("panel_order must be at least 4"));
        }
        if self.series_truncation < 16 {
            return Err(Error::Config("series_truncation must be at least 16"));
        }
        if !positive(self.fd_step) {
            return Err(Error::Config("fd_step must be positive"));
        }
        if self.max_panels == 0 {
            return Err(Error::Config("max_panels must be positive"));
        }
        Ok(())
    }

    pub fn with_branch(&self, branch: BranchSign) -> Self {
        Self {
            branch_at_one: branch,
            ..self.clone()
        }
    }
}
