//! Multiple polylogarithms over complex arguments, their star, weight-shifted
//! and regularized variants, and numerical verification of explicit parity
//! identities.
//!
//! The crate is `no_std` and only needs `alloc`. IO, configuration files and
//! the command-line front end live in the `mpl-verify` companion crate.
//!
//! Layout:
//!
//! - [`numcore`]: logarithm branches, Bernoulli numbers and polynomials, the
//!   `ℬ_l(z)` factors, zeta constants and domain predicates.
//! - [`wordalg`]: exact noncommutative words over `{x, y_a}` with stuffle and
//!   shuffle products.
//! - [`evaluator`]: truncated series and panel-propagated iterated integrals,
//!   plus the star / shifted / tilde variants.
//! - [`regul`]: unique decompositions along `y_1`, the `ρ` map and regularized
//!   values.
//! - [`parity`]: both sides of the parity identities, derivative checks and
//!   limit probes.

#![cfg_attr(not(test), no_std)]
#![warn(missing_debug_implementations)]

extern crate alloc;

mod error;
pub(crate) mod mathf;

pub mod evaluator;
pub mod numcore;
pub mod parity;
pub mod regul;
pub mod wordalg;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Exact rational coefficient used throughout the word algebra.
pub type Rational = num_rational::Ratio<i128>;
