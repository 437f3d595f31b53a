use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero input: {0}")]
    Zero(String),
    #[error("{0} is not an odd prime")]
    NotOddPrime(String),
    #[error("{0} is not a prime")]
    NotPrime(String),
    #[error("cannot factor {value}: cofactor {cofactor} exceeds trial-division bound {bound}")]
    FactorBound {
        value: String,
        cofactor: String,
        bound: u64,
    },
    #[error("admissibility: {0}")]
    Admissibility(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("mismatched parents: {0}")]
    Mismatch(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
