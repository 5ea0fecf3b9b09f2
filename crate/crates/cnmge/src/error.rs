//! Error type shared by the solver stack.

use thiserror::Error;

/// Errors produced by the linear kernel, the solvers and the pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A vector or matrix was built with no entries.
    #[error("empty vector or matrix")]
    Empty,

    /// Dimension of an operand does not match the system dimension.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    /// A non-finite value (NaN or infinity) appeared where a finite one is required.
    #[error("non-finite value in {context}")]
    NonFinite { context: &'static str },

    /// A pivot fell below the singularity threshold during LU elimination.
    #[error("matrix is numerically singular (pivot {pivot:e} below threshold {threshold:e})")]
    Singular { pivot: f64, threshold: f64 },

    /// The residual norm is zero, so the reduction ratio is undefined.
    #[error("residual norm is zero; the iterate already solves the system")]
    ZeroResidual,

    /// The point coincides with a deflated root, where the deflation scale is undefined.
    #[error("point lies on deflated root {root_index}")]
    AtDeflatedRoot { root_index: usize },

    /// The candidate root duplicates an already registered one.
    #[error("root duplicates registered root {root_index}")]
    DuplicateRoot { root_index: usize },

    /// No start produced any stationary point.
    #[error("no stationary points found from any start")]
    NoStationaryPoints,

    /// Every candidate evaluated to a non-finite objective value.
    #[error("all candidates have non-finite objective values")]
    NoFiniteCandidates,

    /// The requested problem name is not in the catalog.
    #[error("unknown problem `{name}`")]
    UnknownProblem { name: String },

    /// The requested dimension is not valid for the problem.
    #[error("problem `{name}` does not support dimension {dim}")]
    InvalidDimension { name: &'static str, dim: usize },

    /// A solver configuration field violates its invariant.
    #[error("invalid solver configuration: {reason}")]
    InvalidConfig { reason: &'static str },
}
