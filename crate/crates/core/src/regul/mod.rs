//! Regularization of divergent values along trailing `y_1` letters.
//!
//! Words are split uniquely as `Σ w_i ∘ y_1^{∘i}` with every `w_i` in `ℌ⁰`
//! (`∘` the stuffle or shuffle product); evaluating the parts gives a
//! polynomial in `T` whose constant term is the regularized value. The two
//! flavours are related by the map `ρ`.

mod decompose;
mod rho;
mod values;

pub use decompose::{decompose, decompose_shuffle, decompose_shuffle_generic, decompose_stuffle, recompose, Decomposition};
pub use rho::{RhoMap, TPoly, MAX_REG_DEGREE};
pub use values::{reg_poly, reg_poly_stuffle_direct, reg_value, trailing_ones, RegMode, Regularized};
