use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("not divisible: {0}")]
    NotDivisible(String),

    #[error("formal degree {formal} is below the true degree {actual}")]
    BadFormalDegree { formal: usize, actual: usize },

    #[error("family is not balanced: weighted sum is ({0}, {1})")]
    UnbalancedFamily(i64, i64),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("no generic parametrization found after {attempts} attempts")]
    GenericityFailure { attempts: usize },

    /// The combinatorial prediction and the resultant oracle disagree. This
    /// is a bug, never an expected outcome.
    #[error("verification mismatch: {0}")]
    VerificationMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn degenerate(msg: impl Into<String>) -> Error {
    Error::DegenerateInput(msg.into())
}
