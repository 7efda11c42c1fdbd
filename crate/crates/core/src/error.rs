//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by construction and evaluation routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A parameter is outside its admissible range (wrong sizes, q too small,
    /// Jacobi exponents at or below -1, ...).
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// An input point lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A geometric object degenerated (|gamma| = 1 subsphere, dependent basis).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// An integrand returned a non-finite value; carries the node index.
    #[error("non-finite integrand value at node {node}")]
    Evaluation { node: usize },

    /// Cross-checked quantities disagree (nullspace dimension vs. d(m,n)).
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn degenerate(msg: impl Into<String>) -> Self {
        Error::Degenerate(msg.into())
    }
}
