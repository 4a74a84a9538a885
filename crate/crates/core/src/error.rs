use thiserror::Error;

use crate::groebner::GroebnerBasis;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("polynomials live over different variable sets")]
    VarSetMismatch,

    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityError { expected: usize, got: usize },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid variable set: {0}")]
    InvalidVarSet(String),

    #[error("rational function with identically zero denominator")]
    InvalidFraction,

    #[error("the coordinates have a common zero (proper ideal, basis {})", .basis)]
    BasePointDetected { basis: GroebnerBasis },

    #[error("generator #{index} does not vanish on the tuple")]
    NotIntoCone { index: usize },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("duplicate points in interpolation set")]
    DuplicatePoints,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    ParseError {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("Gröbner step budget of {budget} reduction steps exceeded")]
    BudgetExceeded { budget: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
