use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("operands live on different superspaces")]
    SpaceMismatch,

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("position {position} out of range 1..={max}")]
    PositionOutOfRange { position: usize, max: usize },

    #[error("index {0} is not valid for this space")]
    InvalidIndex(i64),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("operation not supported for family {family}: {what}")]
    Unsupported { family: &'static str, what: String },

    #[error("element is not homogeneous of degree {0}")]
    NotHomogeneous(usize),

    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("size bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("input tensor is not invariant")]
    NotInvariant,

    #[error("matrix is not in the span of the generators")]
    NotInSpan,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
