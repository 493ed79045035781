use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("invalid Lie type {0}")]
    InvalidLieType(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("root string through a multiple of itself is not defined")]
    ProportionalRoots,
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("expected {expected} summand entries, got {got}")]
    SummandCount { expected: usize, got: usize },
    #[error("almost-complex structure must have sign + on the first summand")]
    NonCanonicalAcs,
    #[error("metric weights must be positive")]
    NonPositiveMetric,
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
