use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("scaling factor must be positive, got {0}")]
    NonPositiveScale(String),

    #[error("polynomial is not square-free")]
    NotSquareFree,

    #[error("interval bound {0} is a root of the polynomial")]
    BoundIsRoot(String),

    #[error("empty interval: lower bound must be below upper bound")]
    EmptyInterval,

    #[error("polynomial has a zero coefficient at position {0}")]
    ZeroCoefficient(usize),

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("invalid sign pattern: {0}")]
    InvalidPattern(String),

    #[error("degree {degree} outside supported range {min}..={max}")]
    DegreeOutOfRange {
        degree: usize,
        min: usize,
        max: usize,
    },

    #[error("invalid series parameters: {0}")]
    InvalidSeriesParameters(String),

    #[error("pair ({pos}, {neg}) is not admissible for pattern {pattern}: {reason}")]
    Inadmissible {
        pattern: String,
        pos: usize,
        neg: usize,
        reason: String,
    },

    #[error("no valid scaling found after {0} halvings")]
    BudgetExhausted(usize),

    #[error("leading coefficient a0 must exceed 1, got {0}")]
    InvalidLeadingCoefficient(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("cannot parse rational `{0}`")]
    ParseRational(String),

    #[error("database line {line}: {message}")]
    Database { line: usize, message: String },
}
