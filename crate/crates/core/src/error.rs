use thiserror::Error;

use crate::exact_coords::HalfInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("{n} outside supported range {min}..={max}")]
    OutOfRange { n: usize, min: usize, max: usize },

    #[error("value is not a half-integer: {0}")]
    NotHalfIntegral(String),

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("infinitesimal character is singular (orthogonal to a root)")]
    SingularCharacter,

    #[error("representation dimension {dim} exceeds bound {bound}")]
    DimensionBoundExceeded { dim: u128, bound: u128 },

    #[error("q = {q} is not a pole of the Plancherel density for this M-type")]
    NotAPole { q: HalfInt },

    #[error("no Weyl chamber of the trivial block matches this character")]
    NoChamberMatch,

    #[error("discrete series selection is ambiguous among {candidates:?}")]
    AmbiguousDiscreteSeries { candidates: Vec<usize> },

    #[error("composition data is ambiguous: {0}")]
    AmbiguousComposition(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    /// Stable name of the variant, used in structured error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::OutOfRange { .. } => "out_of_range",
            Error::NotHalfIntegral(_) => "not_half_integral",
            Error::InvalidWeight(_) => "invalid_weight",
            Error::SingularCharacter => "singular_character",
            Error::DimensionBoundExceeded { .. } => "dimension_bound_exceeded",
            Error::NotAPole { .. } => "not_a_pole",
            Error::NoChamberMatch => "no_chamber_match",
            Error::AmbiguousDiscreteSeries { .. } => "ambiguous_discrete_series",
            Error::AmbiguousComposition(_) => "ambiguous_composition",
            Error::InvalidInput(_) => "invalid_input",
            Error::Internal(_) => "internal",
        }
    }

    /// Whether the error is caused by the input rather than the computation.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::DimensionMismatch { .. }
                | Error::OutOfRange { .. }
                | Error::NotHalfIntegral(_)
                | Error::InvalidWeight(_)
                | Error::InvalidInput(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
