use alloc::boxed::Box;

/// Failures raised by evaluation, regularization and identity assembly.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("depth mismatch: index has depth {index}, arguments have depth {args}")]
    DepthMismatch { index: usize, args: usize },

    #[error("index entries must be positive")]
    ZeroIndexEntry,

    #[error("logarithm of zero")]
    LogOfZero,

    #[error("word does not lie in H^1 (it starts with x)")]
    NotInH1,

    #[error("word does not lie in H^0 (it ends with y_1)")]
    NotInH0,

    #[error("divergent value: trailing (k_d, z_d) = (1, 1) needs regularization")]
    Divergent,

    #[error("series needs all tail products strictly inside radius 0.95, got {radius}")]
    OutsideSeriesRegion { radius: f64 },

    #[error("series did not reach tolerance within {terms} terms")]
    SeriesTruncation { terms: usize },

    #[error("singularity on the integration path at t = {re} + {im}i")]
    SingularityOnPath { re: f64, im: f64 },

    #[error("argument slot vanishes where a reciprocal is required")]
    ZeroArgument,

    #[error("panel budget of {0} panels exhausted")]
    PanelBudget(usize),

    #[error("consecutive product z_({i},{j}) lies on the excluded set")]
    Domain { i: usize, j: usize },

    #[error("zeta constant requested for k = {0}; supported range is 2..=16")]
    ZetaOutOfRange(u32),

    #[error("polynomial degree {0} exceeds the supported regularization degree")]
    DegreeTooHigh(usize),

    #[error("invalid configuration: {0}")]
    Config(&'static str),

    #[error("internal invariant violated: {0}")]
    Internal(&'static str),

    #[error("term (m={m}, n={n}, a={a}, b={b}, l={l}): {source}")]
    Term {
        m: usize,
        n: usize,
        a: u32,
        b: u32,
        l: u32,
        source: Box<Error>,
    },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
