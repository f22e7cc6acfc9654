use thiserror::Error;

use crate::analysis::DistanceReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NonPrime(u32),
    #[error("extension degree n = {0} must be even")]
    OddExtension(u32),
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u32),
    #[error("modulus is irreducible but its root is not primitive")]
    NonPrimitiveModulus,
    #[error("modulus must be a polynomial of degree {expected}, got degree {got}")]
    BadModulus { expected: usize, got: usize },
    #[error("field of order {0} exceeds the table-based limit")]
    FieldTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent {value} outside [0, {max}]")]
    OutOfRange { value: u64, max: u64 },
    #[error("parameter out of range: {0}")]
    RangeError(String),
    #[error("I = {i:?} is not a subset of M_r = {m:?}")]
    InvalidI { i: Vec<u32>, m: Vec<u32> },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("affine permutation needs a nonzero scale")]
    ZeroScale,
    #[error("the zero codeword has no locator polynomial")]
    ZeroCodeword,
    #[error("locator degree {got} does not match weight {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("polynomial support is not contained in {{0}} and I_k: {0}")]
    BadShape(String),
    #[error("{count} subspaces exceed the cap of {cap}")]
    TooMany { count: u128, cap: u128 },
    #[error("code is not eligible: {0}")]
    IneligibleCode(String),
    #[error("search budget exhausted")]
    BudgetExceeded(Box<DistanceReport>),
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}
