use alloc::string::String;

/// Failure modes shared by every module.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes under substitution: {0}")]
    VanishingDenominator(String),
    #[error("denominator is numerically zero at the evaluation point")]
    NearZeroDenominator,
    #[error("denominator does not clear: {0}")]
    NotDivisible(String),
    #[error("input is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("identity failed: {0}")]
    IdentityFailed(String),
    #[error("parameter out of range: {0}")]
    Domain(String),
    #[error("zero Pochhammer symbol in a denominator at index {0}")]
    ZeroPochhammer(usize),
    #[error("half-integer power survived: {0}")]
    HalfPower(String),
}

pub type Result<T> = core::result::Result<T, Error>;
