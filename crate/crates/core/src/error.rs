use thiserror::Error;

use crate::lie::JacobiViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("grade {grade} out of range for dimension {dim}")]
    GradeOutOfRange { grade: usize, dim: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("dimension {dim} exceeds the supported maximum {max}")]
    TooLarge { dim: usize, max: usize },

    #[error("invalid structure constants: {0}")]
    InvalidBracket(String),

    #[error(transparent)]
    Jacobi(#[from] JacobiViolation),

    #[error("coframe matrix is singular")]
    SingularFrame,

    #[error("metric cannot be presented by a rational orthonormal coframe: {0}")]
    Gram(String),

    #[error("action generator {0} is singular")]
    SingularGenerator(usize),

    #[error("group generated by the action exceeds {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("action element {0} does not commute with the differential")]
    NotAutomorphism(usize),

    #[error("action element {0} does not preserve the metric")]
    NotIsometry(usize),

    #[error("character system is not unimodular")]
    NotUnimodular,

    #[error("complement duality fails for index set {0:?}")]
    DualityFailure(Vec<usize>),

    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),

    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),

    #[error("randomized self-check failed: {0}")]
    SelfCheck(String),

    #[error("{0}")]
    Parse(String),
}

impl Error {
    /// True for errors that mean "the input is well formed but mathematically
    /// rejected" as opposed to malformed input.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Jacobi(_)
                | Error::SingularFrame
                | Error::Gram(_)
                | Error::SingularGenerator(_)
                | Error::GroupTooLarge { .. }
                | Error::NotAutomorphism(_)
                | Error::NotIsometry(_)
                | Error::NotUnimodular
                | Error::DualityFailure(_)
                | Error::SelfCheck(_)
        )
    }

    /// Stable machine readable tag used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::GradeOutOfRange { .. } => "grade_out_of_range",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::TooLarge { .. } => "too_large",
            Error::InvalidBracket(_) => "invalid_bracket",
            Error::Jacobi(_) => "jacobi",
            Error::SingularFrame => "singular_frame",
            Error::Gram(_) => "gram",
            Error::SingularGenerator(_) => "singular_generator",
            Error::GroupTooLarge { .. } => "group_too_large",
            Error::NotAutomorphism(_) => "not_automorphism",
            Error::NotIsometry(_) => "not_isometry",
            Error::NotUnimodular => "not_unimodular",
            Error::DualityFailure(_) => "duality_failure",
            Error::UnknownSymbol(_) => "unknown_symbol",
            Error::UnknownEntry(_) => "unknown_entry",
            Error::SelfCheck(_) => "self_check",
            Error::Parse(_) => "parse",
        }
    }
}
