use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error(
        "polynomial has no definite parity: nonzero coefficient of x^{degree} with weight {weight}"
    )]
    ParityViolation { degree: usize, weight: usize },
    #[error("parameter {name} = {value} is out of range (must be > -1)")]
    ParameterOutOfRange { name: &'static str, value: String },
    #[error("moment sequence is not positive definite: Hankel determinant of order {order} is not positive")]
    MomentsNotPositiveDefinite { order: usize },
    #[error("degree {degree} needs {needed} moments, only {available} supplied")]
    InsufficientMoments {
        degree: usize,
        needed: usize,
        available: usize,
    },
    #[error("sequence is not strictly increasing: {0:?}")]
    NotStrictlyIncreasing(Vec<usize>),
    #[error("partition must be nondecreasing: {0:?}")]
    NotNondecreasing(Vec<usize>),
    #[error("partition must have at least one part")]
    EmptyPartition,
    #[error("index {0} already appears in the multi-index")]
    DuplicateIndex(usize),
    #[error("{what} evaluates to {value}, which is not a nonnegative integer")]
    NonIntegerResult { what: &'static str, value: String },
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("interval is empty: lower bound must be below upper bound")]
    EmptyInterval,
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Io(String),
    #[error("{0} is only defined for {1}")]
    Unsupported(&'static str, &'static str),
}
