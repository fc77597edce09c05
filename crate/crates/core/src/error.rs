use thiserror::Error;

/// Errors raised by the algebra and combinatorics routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a complex on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("{0} vertices requested, at most {max} are supported", max = crate::complex::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("operation is undefined on the void complex")]
    VoidComplex,
    #[error("{0} is not a vertex of the complex")]
    NotAVertex(usize),
    #[error("invalid dimension {0}")]
    InvalidDimension(i64),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("ideal has a generator that is not squarefree")]
    NotSquarefree,
    #[error("invalid exponent {0}")]
    InvalidExponent(i64),
    #[error("weight of vertex {index} is {weight}; weights must be positive")]
    InvalidWeight { index: usize, weight: u64 },
    #[error("the zero ideal and the unit ideal are not supported here")]
    DegenerateIdeal,
    #[error("exponent arithmetic overflowed")]
    Overflow,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("field characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
