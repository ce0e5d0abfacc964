//! Bicolored graphs, pressing, and perfect-matching parity.

mod bcg;
mod bicolored;
mod loopy;

pub use bcg::{parse_bcg, to_bcg};
pub use bicolored::{color_string, BicoloredGraph, Color, PressingNumber};
pub use loopy::{LoopyGraph, MATCHING_BRUTE_FORCE_BUDGET};

pub(crate) use bicolored::BitIter;
