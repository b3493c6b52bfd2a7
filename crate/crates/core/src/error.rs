use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid field mode: {0}")]
    InvalidMode(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// 1-based (k, i, j) of the first offending matrix entry.
    #[error("invalid exponent system at (k={k}, i={i}, j={j}): {reason}")]
    InvalidExponentSystem {
        k: usize,
        i: usize,
        j: usize,
        reason: String,
    },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("elements belong to different algebras")]
    ContextMismatch,
    #[error("search space too large: {0}")]
    SearchSpaceTooLarge(String),
    #[error("element is not in the subalgebra: {0}")]
    NotInSubalgebra(String),
    #[error("operation requires a nonzero element")]
    ZeroElement,
    #[error("element is not unitary: {0}")]
    NotUnitary(String),
    #[error("leading coefficient {0} is not a unit")]
    NonUnitLeadingCoefficient(String),
    #[error("coefficient subalgebra is not commutative: {0}")]
    NonCommutativeCoefficients(String),
    #[error("computation budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("unsupported rank: {0}")]
    UnsupportedRank(String),
    #[error("character value for x{0} is zero")]
    ZeroCharacterValue(usize),
    #[error("wrong field mode: {0}")]
    WrongMode(String),
    #[error("invalid split: {0}")]
    InvalidSplit(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("self-check failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
