//! Experiments on the space of successful pressing sequences.

mod edit;
mod pi;
mod unique;

pub use edit::{edit_distance, indel_distance, lcs_len};
pub use pi::{
    build_pi_graph, random_walk, walk_rng, PiGraph, WalkSampler, DEFAULT_MAX_EDIT, PI_GRAPH_BUDGET,
};
pub use unique::{find_uniquely_pressable, is_uniquely_pressable, UNIQUELY_PRESSABLE_MAX_N};
