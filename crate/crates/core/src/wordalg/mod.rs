//! Exact word algebra over the alphabet `{x} ∪ {y_a}`.
//!
//! Letters `y_a` carry an [`ArgSymbol`], a symbolic product of argument slots
//! and a root-of-unity phase, so letters created by the stuffle product compare
//! exactly instead of through floating-point keys.

mod index;
mod products;
mod symbol;
mod word;

pub use index::Index;
pub use products::{shuffle, shuffle_power, shuffle_words, stuffle, stuffle_power, stuffle_words};
pub use symbol::{ArgSymbol, ArgVector};
pub use word::{iota, word_from_index, Letter, LinComb, Word};
