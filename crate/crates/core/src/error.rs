use thiserror::Error;

/// Errors raised across the workbench.
///
/// `BudgetExhausted` is kept apart from every other variant: callers (and the
/// CLI exit code) must be able to tell "ran out of budget" from "no answer".
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("invalid Dynkin type {kind}{rank}")]
    InvalidDynkin { kind: String, rank: usize },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("name collision: `{0}` already exists")]
    NameCollision(String),

    #[error("paths do not compose: {0}")]
    NotComposable(String),

    #[error("inhomogeneous relation: {0}")]
    Inhomogeneous(String),

    #[error("arrow `{0}` has no reverse partner")]
    UnpairedArrow(String),

    #[error("degree {degree} exceeds the basis cutoff {cutoff}")]
    BeyondCutoff { degree: usize, cutoff: usize },

    #[error("quotient algebra not detected finite-dimensional below degree {0}")]
    NotFiniteDimensional(usize),

    #[error("unsupported vertex partition: {0}")]
    Partition(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("zero determinant at position {0}")]
    ZeroDeterminant(usize),

    #[error("polynomial ring mismatch: {0}")]
    RingMismatch(String),

    #[error("module error: {0}")]
    Module(String),

    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("{0}")]
    Parse(#[from] ParseError),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExhausted(_))
    }
}

/// A text-format error carrying a 1-based line and column.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
