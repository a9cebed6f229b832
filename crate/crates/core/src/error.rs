use thiserror::Error;

use crate::ordering::ViolationReport;

/// Errors produced while building or combining complexes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex token is empty")]
    EmptyToken,

    #[error("vertex token {0:?} contains the reserved separator '|'")]
    ReservedCharacter(String),

    #[error("token {0:?} is not a well-formed composite token")]
    MalformedToken(String),

    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),

    #[error("vertex {0:?} is repeated")]
    DuplicateVertex(String),

    #[error("a simplex needs at least one vertex")]
    EmptySimplex,

    #[error("{0} is not a simplex")]
    NotASimplex(String),

    #[error("invalid window [{lo}, {hi}]: lower end exceeds upper end")]
    InvalidWindow { lo: i64, hi: i64 },

    #[error("window [{lo}, {hi}] does not contain level {level}")]
    WindowTooSmall { lo: i64, hi: i64, level: i64 },

    #[error("support of the point is not a chain of the vertex order")]
    SupportNotAChain,

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("ordering axioms violated:\n{0}")]
    ValidationFailed(ViolationReport),

    #[error("complex is not flag")]
    NotFlag,

    #[error("syntax error: {0}")]
    Syntax(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
