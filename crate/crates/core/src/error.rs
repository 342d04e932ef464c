use thiserror::Error;

use crate::doublecat::DoubleKind;

#[derive(Debug, Error)]
pub enum Error {
    /// Two morphisms whose endpoints do not line up.
    #[error("composition arity mismatch: {0}")]
    Arity(String),

    /// Data that violates a structural invariant (non-bijective permutation,
    /// overlapping fibers, out-of-range letters, ...).
    #[error("invalid {what}: {reason}")]
    Invalid { what: &'static str, reason: String },

    #[error("double-category kind mismatch: expected {expected:?}, found {found:?}")]
    Kind { expected: DoubleKind, found: DoubleKind },

    #[error("wrong endpoints: {0}")]
    Endpoints(String),

    /// The input algebra does not satisfy what the operation needs.
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unknown builtin algebra {0:?}")]
    UnknownAlgebra(String),

    /// An operad composition outside the truncated tables.
    #[error("operad tables do not cover {0}")]
    NotCovered(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid {
            what,
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
