use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed permutation {input:?}: {reason}")]
    MalformedPermutation { input: String, reason: String },

    #[error("{perm} is not a fireworks permutation")]
    NotFireworks { perm: String },

    #[error("invalid block sizes {0:?}: blocks must be nonempty and positive")]
    InvalidBlocks(Vec<usize>),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("degree {degree} is smaller than total degree {needed} of {point}")]
    DegreeTooSmall { degree: u32, needed: u32, point: String },

    #[error("lower bound {low} exceeds upper bound in coordinate {coord}")]
    IntervalBound { low: String, coord: usize },

    #[error("cell ({row}, {col}) lies outside the {shape}")]
    CellOutOfRange { row: usize, col: usize, shape: String },

    #[error("size {n} exceeds the supported bound {max}")]
    TooLarge { n: usize, max: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),
}
