//! Error type shared by every module in the crate.

use thiserror::Error;

/// Crate-wide error enum; variants map one-to-one onto the failure modes of
/// the exact-arithmetic and numerical layers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Exact polynomial division left a nonzero remainder.
    #[error("not divisible")]
    NotDivisible,

    /// Inversion or negative power of a non-unit element.
    #[error("non-invertible")]
    NonInvertible,

    /// Evaluation of a polynomial with negative exponents at (or too close to) zero.
    #[error("pole at origin")]
    PoleAtOrigin,

    /// Malformed or invalid graph description.
    #[error("graph format: {0}")]
    GraphFormat(String),

    /// An operation that requires a connected graph was given a disconnected one.
    #[error("not connected")]
    NotConnected,

    /// An operation that requires a marked vertex pair was given a graph without one.
    #[error("missing marked vertex pair")]
    MissingMarked,

    /// A quantity that must reduce to an honest Laurent polynomial failed to.
    #[error("normalization failure: {0}")]
    NormalizationFailure(String),

    /// The root finder did not reach the residual target; carries the best iterate.
    #[error("root finding did not converge (worst residual {residual:.3e})")]
    RootsDidNotConverge {
        /// Best root approximations found, as (re, im) pairs.
        roots: Vec<(f64, f64)>,
        /// Worst relative residual among them.
        residual: f64,
    },

    /// A hypothesis needed for a divergence certificate does not hold
    /// (a vanishing eigenvalue, or an exactly constant eigenvalue ratio).
    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),

    /// Argument outside the documented domain of an operation.
    #[error("domain: {0}")]
    Domain(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
