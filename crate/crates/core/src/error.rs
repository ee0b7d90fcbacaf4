use thiserror::Error;

/// Errors produced by validation and by the few fallible computations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix must be square and nonempty")]
    NonSquareMatrix,
    #[error("series inversion requires constant term 1 or -1, got {0}")]
    NonUnitConstant(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid touch sequence: {0}")]
    InvalidTouchSequence(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("path has {got} steps, expected 2n+2 = {want}")]
    PathLength { got: usize, want: usize },
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("brute force at n = {n} exceeds the bound {max}; raise the bound to override")]
    BruteForceBound { n: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
