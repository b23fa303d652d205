use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvoError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at {context}: {message}")]
    Parse { context: String, message: String },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("parameter error for {family}: constraint `{constraint}` is violated")]
    Parameter { family: String, constraint: String },

    #[error("expected {expected} parameters for {family}, got {found}")]
    ParameterCount {
        family: String,
        expected: usize,
        found: usize,
    },

    #[error("span is not closed under the bracket")]
    NotClosed,

    #[error("algebra is not power-associative")]
    NotPowerAssociative,

    #[error("matrix is not a derivation")]
    NotDerivation,

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, EvoError>;
