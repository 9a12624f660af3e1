use thiserror::Error;

/// Errors produced by field construction and the lambda/epsilon operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("q = {p}^{s} exceeds the configured bound {bound}")]
    SizeBound { p: u64, s: u32, bound: u64 },
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("elements belong to different fields")]
    MixedFields,
    #[error("coefficient vector does not match the field (length {len}, expected {expected})")]
    BadCoefficients { len: usize, expected: usize },
    #[error("coefficient {0} out of range for characteristic {1}")]
    CoefficientRange(u64, u64),
    #[error("quadratic character is undefined at zero")]
    ZeroArgument,
    #[error("operation requires odd residue characteristic, got p = 2")]
    EvenCharacteristic,
    #[error("additive character twist must be a unit")]
    ZeroTwist,
    #[error("ramification index {e} is divisible by p = {p} (wild ramification)")]
    WildRamification { p: u64, e: u32 },
    #[error("unit residue must be nonzero")]
    ZeroUnitResidue,
    #[error("valuation {got} on c, expected {expected}")]
    WrongValuation { expected: i64, got: i64 },
    #[error("{0} is not a listed square class of Q_2^x")]
    UnknownSquareClass(i64),
    #[error("operation requires a ramified quadratic extension")]
    NotRamified,
    #[error("operation requires an unramified quadratic extension")]
    NotUnramified,
    #[error("lambda result is internally inconsistent: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
