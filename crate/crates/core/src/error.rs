use thiserror::Error;

/// Errors raised by field, polynomial, ring and ideal operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("arity mismatch: expected {expected} variables, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("operands belong to different coordinate rings")]
    RingMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid field element: {0}")]
    InvalidElement(String),
    #[error("exponent {0} exceeds the per-variable cap of 2^20")]
    ExponentOverflow(u64),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("point set must be nonempty")]
    EmptyPointSet,
    #[error("duplicate point in point set")]
    DuplicatePoint,
    #[error("point is not a member of the point set")]
    NotInPointSet,
    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("operation requires a univariate polynomial")]
    NotUnivariate,
    #[error("extended gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("an ideal needs at least one generator")]
    NoGenerators,
    #[error("element is not a member of the ideal")]
    NonMember,
    #[error("ideal is proper; [1] is not a member")]
    ProperIdeal,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
