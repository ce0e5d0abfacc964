use thiserror::Error;

/// Errors raised by matrix, graph and sequence operations.
///
/// Outcomes that are part of an operation's normal range (no pivot-free LU,
/// a sequence that does not verify) are reported through `Option` or a
/// verdict, not through this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no pivot: matrix is all zero")]
    NoPivot,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("matrix dimensions must be positive")]
    EmptyDimension,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("press of white vertex {vertex}")]
    WhiteVertexPress { vertex: usize },
    #[error("vertex {vertex} repeated in sequence")]
    RepeatedVertex { vertex: usize },
    #[error("not a permutation of [{n}]")]
    NotPermutation { n: usize },
    #[error("{what} budget exceeded: {actual} > {limit}")]
    BudgetExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("no successful sequence exists")]
    NoSuccessfulSequence,
    #[error("base sequence is not a successful pressing sequence")]
    BaseNotSuccessful,
    #[error("ψ-criterion requires full rank")]
    PsiRequiresFullRank,
    #[error("sequence length {actual} does not match required length {expected}")]
    SequenceLength { expected: usize, actual: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
