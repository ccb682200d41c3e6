//! Crate-wide error type.

use crate::Int;
use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("points span affine dimension {rank}, need {dim}")]
    NotFullDimensional { dim: usize, rank: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("point budget exceeded in {stage}: {candidates} candidates > budget {budget}")]
    BudgetExceeded {
        stage: String,
        candidates: Int,
        budget: u64,
    },

    /// The interpolated polynomial disagrees with enumeration at the
    /// verification node. The counting function of a lattice polytope is a
    /// polynomial, so this always signals an enumeration or interpolation bug.
    #[error("interpolation mismatch at m={at}: polynomial gives {polynomial}, enumeration gives {enumerated}")]
    InterpolationMismatch {
        at: u32,
        polynomial: Int,
        enumerated: Int,
    },

    /// A delta-vector entry came out negative; nonnegativity is a theorem, so
    /// this signals an enumeration bug.
    #[error("negative delta entry at index {index}: {value}")]
    NegativeDelta { index: usize, value: Int },

    #[error("reciprocity violation at m={m}: enumerated {enumerated}, polynomial {polynomial}")]
    ReciprocityViolation {
        m: u32,
        enumerated: Int,
        polynomial: Int,
    },

    /// The four reflexivity characterizations disagreed on a polytope with
    /// interior origin; their equivalence is a theorem.
    #[error("equivalence violation: {0}")]
    EquivalenceViolation(String),

    /// A predicate's hypothesis is not met, so it refuses to answer.
    #[error("criterion inapplicable: {0}")]
    CriterionInapplicable(String),

    #[error("unknown theorem id: {0}")]
    UnknownTheorem(String),

    #[error("generation failed after {attempts} attempts")]
    GenerationFailed { attempts: u32 },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
