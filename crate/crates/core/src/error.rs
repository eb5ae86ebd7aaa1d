//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by partition enumeration, series arithmetic, and numerical
/// evaluation. Verification *failures* are not errors: the verifiers return
/// reports with `pass = false` instead.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A configured cap (partition size, Bernoulli index, |D|, ...) was exceeded.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Division by a series whose constant term is not invertible, or a
    /// log/exp precondition violation.
    #[error("not a unit: {0}")]
    NotAUnit(String),

    /// Addition or subtraction of series with different fractional offsets.
    #[error("offset mismatch: {lhs} vs {rhs}")]
    OffsetMismatch { lhs: String, rhs: String },

    /// A requested error tolerance cannot be met within the available data
    /// (series order, term cap).
    #[error("truncation target unreachable: {0}")]
    Truncation(String),

    /// The argument is in the domain but convergence would be impractically slow.
    #[error("slow convergence: {0}")]
    SlowConvergence(String),

    /// Malformed input (non-monotone partition parts, bad rational literal, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
