use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: bad permutation, out-of-range vertex, invalid family parameter.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A request that would exceed a configured resource guard.
    #[error("{what} exceeds the limit of {limit}; pass {override_flag} to run anyway")]
    ResourceLimit {
        what: String,
        limit: u64,
        override_flag: &'static str,
    },

    /// A closed formula was asked for outside the range it holds on.
    #[error("formula not applicable for n = {n}: valid range is {valid}; use brute force instead")]
    NotApplicable { n: usize, valid: &'static str },

    /// Reciprocal of a power series with zero constant term.
    #[error("power series has zero constant term and is not invertible")]
    Singular,

    /// An internal cross-check failed (non-integral EGF coefficient etc).
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
