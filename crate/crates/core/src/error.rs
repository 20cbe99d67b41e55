use thiserror::Error;

/// Errors raised by the exact arithmetic, cone geometry and reduction layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("zero has no associate representative")]
    ZeroAssociate,
    #[error("translation modulus is zero")]
    ZeroModulus,
    #[error("zero vector has no ray")]
    ZeroVector,
    #[error("zero matrix has no normal form")]
    ZeroMatrix,
    #[error("minimal vectors require a definite form")]
    NotDefinite,
    #[error("cone containment requires a nonzero positive semidefinite point")]
    NotSemidefinite,
    #[error("cone location did not stabilize")]
    ConeLocationFailed,
    #[error("no reducing point needed")]
    NoReducingPointNeeded,
    #[error("cone has no admissible vertex")]
    NoAdmissibleVertex,
    #[error("nothing to subdivide")]
    NothingToSubdivide,
    #[error("reduction did not terminate within configured passes")]
    NonTermination,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not a lift of the edge: {0}")]
    InvalidLift(String),
    #[error("content generator search failed (is the class number 1?)")]
    ContentSearchFailed,
    #[error("invalid field parameters: {0}")]
    InvalidFieldParams(String),
    #[error("invalid cone data: {0}")]
    InvalidConeData(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("field mismatch: operands live in different fields")]
    FieldMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
