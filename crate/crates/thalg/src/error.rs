use thiserror::Error;

/// Errors raised by the decision procedures and their input layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial degree too small for this operation")]
    DegreeTooSmall,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("interval endpoint is a root")]
    EndpointIsRoot,
    #[error("polynomial is not irreducible over Q")]
    NotIrreducible,
    #[error("degree cap exceeded: estimate {estimate} > cap {cap}")]
    DegreeCapExceeded { estimate: u64, cap: u64 },
    #[error("inconsistent tower: {0}")]
    InconsistentTower(String),
    #[error("complex embedding unresolved at current precision")]
    EmbeddingUnresolved,
    #[error("element not in group")]
    ElementNotInGroup,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("no invariant complement: no nonzero invariant subspace meets the span of {blocks} block(s) trivially")]
    NoInvariantComplement { blocks: usize },
    #[error("index set is not a proper subset of the block indices")]
    IndexSetNotProper,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
