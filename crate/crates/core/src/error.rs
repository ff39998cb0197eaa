use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("{0} is not a supported modulus (need a prime below 10)")]
    BadModulus(u32),

    #[error("modulus mismatch: GF({0}) vs GF({1})")]
    ModulusMismatch(u32, u32),

    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invariant violation: {0}")]
    Invariant(String),

    #[error("budget exhausted after examining {examined} of {budget} candidates")]
    Budget { examined: u64, budget: u64 },

    #[error("input not in canonical form: {0}")]
    NotCanonical(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
