//! Pressing sequences: five verifiers, enumeration, counting, and the
//! coloring results.

mod coloring;
mod enumerate;
mod sequence;
mod verify;

pub use coloring::{average_count, unique_coloring, AVERAGE_COUNT_BUDGET};
pub use enumerate::{
    count_sequences, count_sequences_by_length, enumerate_sequences, SequenceEnumerator,
    MAX_ENUMERATION_VERTICES,
};
pub use sequence::{all_arrangements, PressingSequence};
pub use verify::{
    cholesky_report, qu_relation, verify, verify_cholesky, verify_matchings, verify_minors,
    verify_psi, verify_simulation, Method, VerificationReport, Witness,
};

pub(crate) use enumerate::{black_mask, board_components_ok, board_of, is_cleared, press_board};
