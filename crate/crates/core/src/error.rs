use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("weight-variable arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("denominator vanishes under specialization: {0}")]
    DenominatorVanishes(String),

    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("depth bound {depth} exceeded")]
    DepthExceeded { depth: usize },

    #[error("invalid root datum: {0}")]
    InvalidDatum(String),

    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("concrete weight required")]
    GenericWeight,

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
