use thiserror::Error;

/// Errors raised by the classification engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Dynkin type {series}_{rank}")]
    InvalidDynkin { series: char, rank: usize },
    #[error("vector {0:?} is not a positive root")]
    NotARoot(Vec<i64>),
    #[error("group element is not in the noncrossing interval [id, cox]")]
    NotInInterval,
    #[error("operation requires series {expected}, got {actual}")]
    WrongSeries { expected: char, actual: char },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition is crossing")]
    Crossing,
    #[error("partition is not invariant under rotation by {step}")]
    NotInvariant { step: usize },
    #[error("bad divisor: {0}")]
    BadDivisor(String),
    #[error("invalid category type: {0}")]
    InvalidType(String),
    #[error("type {0} is excluded from the Coxeter-conjugation criterion")]
    ExcludedType(String),
    #[error("no closed-form count for series {0}")]
    NoClosedForm(char),
    #[error("not an algebra type in the standard self-injective list: {0}")]
    NotAsashibaType(String),
    #[error("window of {requested} columns exceeds the cap of {cap}")]
    WindowTooLarge { requested: usize, cap: usize },
    #[error("empty window")]
    EmptyWindow,
    #[error("diagram payload does not match: {0}")]
    PayloadMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
