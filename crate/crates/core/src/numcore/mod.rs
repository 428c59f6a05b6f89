//! Numeric foundations shared by every evaluator: logarithm branches,
//! Bernoulli data, the `ℬ_l` factors, zeta constants and domain predicates.

mod bernoulli;
mod config;
mod constants;
mod dd;
mod domain;
mod log;

pub use bernoulli::{bernoulli_number, bernoulli_numbers, bernoulli_poly, cal_b, MAX_BERNOULLI};
pub use config::{BranchSign, EvalConfig};
pub use constants::{euler_gamma, zeta_const, ZetaTable, MAX_ZETA};
pub use dd::{ComplexDd, Dd};
pub use domain::{domain_check, in_cut_set, CutSet, DomainFamily, DomainReport};
pub use log::{log_minus, principal_log};
