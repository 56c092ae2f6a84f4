use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("entry count {found} does not match {rows}x{cols}")]
    EntryCount { rows: usize, cols: usize, found: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("index {index} out of range for dimension {bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("index {0} listed twice")]
    DuplicateIndex(usize),
    #[error("entry {0} is not +1 or -1")]
    NotSign(usize),
    #[error("entry {0} is not 0 or 1")]
    NotBinary(usize),
    #[error("empty index set")]
    EmptyIndexSet,
    #[error("radius entry ({row}, {col}) is negative")]
    NegativeEntry { row: usize, col: usize },
    #[error("{0} must be positive")]
    NotPositive(&'static str),
    #[error("expected length {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("lower bound exceeds upper bound at ({row}, {col})")]
    InvertedBounds { row: usize, col: usize },
    #[error("matrix interval is not singular")]
    NotSingular,
    #[error("instance too large: {what} = {value} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        value: usize,
        limit: usize,
    },
}
