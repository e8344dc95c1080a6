use thiserror::Error;

/// Errors raised by the algebra kernel and the checks built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("index {index} out of range (expected 0..{len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("empty matrix")]
    EmptyMatrix,
    #[error("wrong monomial order: {0}")]
    WrongOrder(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("expected exactly {expected} vector fields, found {found}")]
    WrongFieldCount { expected: usize, found: usize },
    #[error("not logarithmic: {0}")]
    NotLogarithmic(String),
    #[error("polynomial is not reduced: {0}")]
    NotReduced(String),
    #[error("germ is not a coordinate subspace: {0}")]
    NotCoordinateGerm(String),
    #[error("unknown example `{0}`")]
    UnknownExample(String),
}

pub type Result<T> = std::result::Result<T, Error>;
