//! Error type shared by all modules.

/// Errors produced by the numerical operations in this crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Every input vector has norm at or below the rank tolerance.
    #[error("all input vectors are numerically zero")]
    AllZeroInput,

    /// An iterative scheme exhausted its sweep budget.
    #[error("iteration did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    /// A matrix required to be positive definite has an eigenvalue at or
    /// below the supplied tolerance.
    #[error("matrix is not positive definite (smallest eigenvalue {eigenvalue:.6e})")]
    NotPositiveDefinite { eigenvalue: f64 },

    /// The vectors do not span the ambient space.
    #[error("vectors do not form a frame for the ambient space")]
    NotAFrame,

    /// A vector lies measurably outside the span of the supplied basis.
    #[error("vector {index} lies outside the basis span (relative residual {residual:.6e})")]
    SpanMismatch { index: usize, residual: f64 },

    /// Dimensions of two inputs do not line up.
    #[error("shape mismatch: {context}")]
    ShapeMismatch { context: String },

    /// Two frequency labels coincide.
    #[error("duplicate frequency {value}")]
    DuplicateLambda { value: f64 },

    /// An interval was supplied with its endpoints out of order.
    #[error("invalid interval: end {end} precedes start {start}")]
    BadInterval { start: f64, end: f64 },

    /// A spiral specification violates one of its admissibility inequalities.
    #[error("inadmissible spiral spec: {constraint} violated")]
    InadmissibleSpec { constraint: String },

    /// An index partition does not cover the frame exactly once.
    #[error("invalid partition: {reason}")]
    PartitionInvalid { reason: String },

    /// The subspace dimensions of a partition do not sum to the ambient
    /// dimension.
    #[error("subspace dimensions sum to {got}, ambient dimension is {expected}")]
    DirectSumViolated { got: usize, expected: usize },

    /// Points of the wrong coordinate dimension were supplied.
    #[error("points must be {expected}-dimensional, got {got}-dimensional")]
    DimensionMismatch { expected: usize, got: usize },

    /// The frame operator is too ill-conditioned to invert reliably.
    #[error("frame operator condition number {cond:.3e} exceeds {limit:.1e}")]
    IllConditioned { cond: f64, limit: f64 },

    /// A truncation length outside `1..=frame length` was requested.
    #[error("truncation length {got} must lie in 1..={max}")]
    BadTruncation { got: usize, max: usize },

    /// A scalar parameter violates its domain constraint.
    #[error("invalid parameter: {context}")]
    InvalidParameter { context: String },
}

pub type Result<T> = std::result::Result<T, Error>;
