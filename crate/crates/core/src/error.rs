use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported Cartan type {kind} with rank {rank}")]
    UnsupportedType { kind: String, rank: usize },

    #[error("unknown Cartan type label `{0}`")]
    UnknownType(String),

    #[error("weight has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("element is not a minimal coset representative for the parabolic subset")]
    NotMinimalRepresentative,

    #[error("element is not a Peterson coset representative")]
    NotPetersonRepresentative,

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("node budget of {0} exhausted")]
    BudgetExhausted(usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
