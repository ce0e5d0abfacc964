//! Dense linear algebra over GF(2).

mod elimination;
mod factor;
mod matrix;
mod perm;
mod random;

pub use elimination::{EliminationStep, EliminationTrace};
pub use matrix::Gf2Matrix;
pub use perm::PermutationMap;

pub(crate) use matrix::WORD_BITS;
