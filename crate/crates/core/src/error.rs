use thiserror::Error;

/// Errors produced by field, polynomial, classification and code operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} exceeds the supported range")]
    FieldTooLarge(u128),
    #[error("extension degree must be at least 1")]
    ZeroExtensionDegree,
    #[error("modulus must be monic of degree {expected} over F_p")]
    BadModulus { expected: u32 },
    #[error("modulus is reducible over F_p")]
    ReducibleModulus,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("modulus polynomial must be nonconstant")]
    ConstantModulus,
    #[error("operation requires a nonconstant polynomial")]
    ConstantInput,
    #[error("operation requires a nonzero polynomial")]
    ZeroInput,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial is inseparable (derivative vanishes)")]
    InseparableInput,
    #[error("expected degree {expected}, got {actual}")]
    WrongDegree { expected: usize, actual: usize },
    #[error("operation requires odd characteristic")]
    EvenCharacteristic,
    #[error("characteristic {0} is not supported by this operation")]
    UnsupportedCharacteristic(u32),
    #[error("degree {0} is outside the supported range 2..=5")]
    UnsupportedDegree(usize),
    #[error("characteristic {p} divides the group order {order}; ramification is wild")]
    WildRamificationUnsupported { p: u32, order: u64 },
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("census contains no squarefree specializations")]
    EmptyCensus,
    #[error("message parameter t = {t} must satisfy 1 <= t <= {ell}")]
    BadMessageParam { t: usize, ell: usize },
    #[error("message has length {actual}, expected {expected}")]
    WrongMessageLength { expected: usize, actual: usize },
    #[error("codeword has length {actual}, expected {expected}")]
    WrongCodewordLength { expected: usize, actual: usize },
    #[error("codeword has no erased coordinate")]
    NoErasure,
    #[error("coordinate {position} cannot be repaired: its repair group has another erasure")]
    NotLocallyRepairable { position: usize },
    #[error("search space {size} exceeds the cap {cap}")]
    SearchSpaceTooLarge { size: u128, cap: u128 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
