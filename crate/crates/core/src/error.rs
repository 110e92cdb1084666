use thiserror::Error;

/// Errors raised by the combinatorial engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank: {0}")]
    InvalidRank(String),
    #[error("mixed integrality: entries must be all integers or all strict half-integers")]
    MixedParity,
    #[error("degree {degree} out of range (max {max})")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("outside stable combinatorics: {0}")]
    OutsideStableCombinatorics(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("infinitesimal character does not match the correspondence pattern: {0}")]
    NotInPattern(String),
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("cutoff {have} too small, need at least {need}")]
    CutoffTooSmall { have: u32, need: u32 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Guard violations are reported as skipped grid points rather than failures.
    pub fn is_guard(&self) -> bool {
        matches!(
            self,
            Error::OutsideStableCombinatorics(_) | Error::CutoffTooSmall { .. }
        )
    }
}
