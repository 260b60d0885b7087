use thiserror::Error;

/// Errors for malformed queries and invalid construction data.
///
/// Mathematical "no" answers are never errors: decision procedures return
/// [`crate::Verdict`] values and validity checks return
/// [`crate::CheckReport`]s.  An `Error` means the question itself was
/// ill-posed (mismatched shapes, mismatched algebras, invalid input).
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("coalgebra mismatch: {0}")]
    CoalgebraMismatch(String),
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error("validation failed for {context}:\n{details}")]
    ValidationFailed { context: String, details: String },
    #[error("map is not invertible: {0}")]
    NotInvertible(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidSpec(msg.into())
    }
}
