use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("map is not well defined: {0}")]
    NotWellDefined(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("degree {degree} is out of range: {supported}")]
    OutOfRange { degree: u32, supported: String },
    #[error("no tabulated value: {0}")]
    NotCovered(String),
    #[error("presentation has {count} generators, more than the limit of {limit}")]
    TooManyGenerators { count: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
