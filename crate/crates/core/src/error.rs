use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("field of size {size} exceeds the configured cap of {cap} elements")]
    SizeCapExceeded { size: u128, cap: u64 },

    #[error("{s} does not divide the extension degree {m}")]
    NotADivisor { s: u32, m: u32 },

    #[error("modulus is not a primitive polynomial of degree {degree} over GF({p})")]
    NotPrimitive { p: u32, degree: u32 },

    #[error("operands belong to different field towers")]
    TowerMismatch,

    #[error("elements do not form a basis over the base field")]
    NotABasis,

    #[error("basis is not a normal basis")]
    NotNormalBasis,

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("generators X, F_1, ..., F_k are linearly dependent")]
    DependentGenerators,

    #[error("generator {index} has a nonzero constant term")]
    NonzeroConstantTerm { index: usize },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Two independent computations of the same quantity disagree.
    #[error("inconsistency: {0}")]
    Inconsistency(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
