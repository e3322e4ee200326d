use thiserror::Error;

/// Errors produced by graph construction, ideal arithmetic and fiber computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("loop edge at vertex `{0}`")]
    LoopEdge(String),
    #[error("vertex index {index} out of range for a graph on {order} vertices")]
    InvalidVertex { index: usize, order: usize },
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("independent-set description is inconsistent: {0}")]
    InconsistentIndependentSets(String),
    #[error("variable universes differ")]
    UniverseMismatch,
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("operation undefined on the zero ideal")]
    ZeroIdeal,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("capacity exceeded: {what} needs {needed}, limit is {limit}")]
    Capacity {
        what: &'static str,
        needed: u128,
        limit: u128,
    },
    #[error("ideal is not quasi-equigenerated; fiber cone is not the monomial subalgebra")]
    NotQuasiEquigenerated,
    #[error("weight witness does not fit in 64-bit integers")]
    WitnessTooLarge,
    #[error("graph file: {0}")]
    GraphFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
