use thiserror::Error;

/// Errors raised by the algebraic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("field order {p}^{k} is outside the supported range (q <= 256)")]
    UnsupportedOrder { p: u32, k: u32 },
    #[error("modulus must be monic of degree {expected} with coefficients below {p}")]
    BadModulus { expected: u32, p: u32 },
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u32),
    #[error("field element {value} is outside GF({q})")]
    ElementOutOfRange { value: u32, q: u32 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("octonion is not a scalar multiple of the identity")]
    NotScalar,
    #[error("octonion must be non-zero and isotropic")]
    NotIsotropic,
    #[error("the zero vector has no colour")]
    ZeroVector,
    #[error("vector is not white")]
    NotWhite,
    #[error("vector lies outside the required subspace")]
    OutsideSubspace,
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operation requires characteristic {expected}")]
    WrongCharacteristic { expected: u32 },
    #[error("matrix does not preserve the quadratic form")]
    NotIsometry,
    #[error("quadratic form is singular")]
    SingularForm,
    #[error("work budget exceeded: {0}")]
    BudgetExceeded(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
