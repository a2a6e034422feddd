use thiserror::Error;

use crate::scalar::FieldSpec;

/// Errors raised by the library.
///
/// Outcomes that are ordinary answers (a failing axiom, a missing square
/// root, a non-representable Gram factorization) are values, not errors.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime modulus {0} is too large (must be below 2^32)")]
    PrimeTooLarge(u64),
    #[error("cyclotomic order must be at least 1")]
    ZeroCyclotomicOrder,
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{field} has no primitive root of unity of order {order}")]
    MissingRootOfUnity { field: FieldSpec, order: u64 },
    #[error("operation not supported over {field}: {reason}")]
    Unsupported { field: FieldSpec, reason: String },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("presentation has no antipode")]
    MissingAntipode,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("constructed algebra failed its {0} check")]
    PostCheckFailed(String),
    #[error("characteristic {characteristic} divides {order}")]
    CharacteristicDivides { characteristic: u64, order: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
