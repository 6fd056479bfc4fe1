//! Error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Two vectors live in Fock spaces truncated at different levels.
    #[error("incompatible truncations: dim {left} vs dim {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// A state (or an operator application on one) needs more Fock levels
    /// than the vector carries. `required` is the smallest dimension known
    /// to be adequate.
    #[error(
        "truncation overflow: dim {dim} is too small (need at least {required}): {detail}"
    )]
    TruncationOverflow {
        dim: usize,
        required: usize,
        detail: String,
    },

    /// A parametrized family was constructed with invalid parameters.
    #[error("invalid state family: {0}")]
    InvalidFamily(String),

    /// An operation was requested at a parameter point where its closed
    /// form is singular.
    #[error("singular parameter point: {0}")]
    SingularPoint(String),

    /// A family evaluation produced something the limit machinery cannot
    /// consume (non-finite inner products, non-normalized base state, ...).
    #[error("family evaluation failed: {0}")]
    FamilyEvaluation(String),

    /// Successive refinement levels of a limit did not converge.
    #[error("limit extrapolation diverged: {0}")]
    LimitDivergence(String),

    /// Mandel Q is undefined for a state with zero mean photon number.
    #[error("Mandel Q undefined: mean photon number is zero")]
    QUndefined,

    /// Requested evaluation grid exceeds the resource guard.
    #[error("grid too large: {nx} x {ny} nodes exceeds the {max} node guard")]
    GridTooLarge { nx: usize, ny: usize, max: usize },

    /// Malformed input that is not tied to a specific family.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
