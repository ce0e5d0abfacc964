//! Bicolored graph pressing and its GF(2) matrix counterpart.
//!
//! Pressing a black vertex of a bicolored graph complements the subgraph on
//! its closed neighborhood. A sequence of presses that turns every vertex
//! white and removes every edge is successful. The [`gf2`] module carries
//! the matrix side (elimination, rank, LU and Cholesky factors), [`graph`]
//! the graphs themselves, [`sequences`] the characterizations of successful
//! sequences and [`explorer`] experiments on the set of all of them.

pub mod error;
pub mod explorer;
pub mod gf2;
pub mod graph;
pub mod sequences;

pub use error::{Error, Result};
