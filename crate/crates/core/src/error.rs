use thiserror::Error;

use crate::algebra::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure classes surfaced by the library.
///
/// `TheoremViolation` is kept apart from the input and precondition classes:
/// it means an exact computation contradicted a proven statement and must
/// never be absorbed by callers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("format error at line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("algebra fails validation: {0}")]
    Invalid(ValidationReport),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
