use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("indeterminate valuation: {0}")]
    IndeterminateValuation(String),
    #[error("tropical bottom element used in arithmetic")]
    BottomArithmetic,
    #[error("division by zero")]
    DivisionByZero,
    #[error("index {0} is frozen")]
    FrozenIndex(usize),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("({0}, {1}) is not an internal diagonal")]
    NotADiagonal(usize, usize),
    #[error("non-integral exchange entry b[{0}][{1}]")]
    NonIntegralExponent(usize, usize),
    #[error("reduction overflow")]
    ReductionOverflow,
    #[error("singular system: {0}")]
    Singular(String),
    #[error("flags {0} and {1} are not transverse")]
    NonTransverse(usize, usize),
    #[error("search unconverged at bound {0}")]
    Unconverged(u32),
    #[error("label not found: {0}")]
    LabelNotFound(String),
    #[error("chart mismatch: {0}")]
    ChartMismatch(String),
    #[error("lift failed after {0} attempts")]
    LiftFailed(usize),
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
