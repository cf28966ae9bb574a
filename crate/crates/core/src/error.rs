use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("generator `{name}` has arity {expected} but was given {found} arguments")]
    ArityMismatch {
        name: String,
        expected: usize,
        found: usize,
    },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),

    #[error("invalid generator declaration: {0}")]
    InvalidGenerator(String),

    #[error("invalid leaf labeling: {0}")]
    InvalidLabeling(String),

    #[error("monomial kind mismatch: {0}")]
    KindMismatch(String),

    #[error("series mismatch: {0}")]
    SeriesMismatch(String),

    #[error("series is not invertible: {0}")]
    NotInvertible(String),

    #[error("inner series of a composition must have zero constant term")]
    NonZeroConstant,

    #[error("presentation is not shuffle regular; missing from the relation ideal: {}", missing.join(", "))]
    NotShuffleRegular { missing: Vec<String> },

    #[error("presentation is not symmetric regular; missing from the relation ideal: {}", missing.join(", "))]
    NotSymmetricRegular { missing: Vec<String> },

    #[error("recursion for variable `{0}` is not well-founded")]
    NotWellFounded(String),

    #[error("enumeration exceeded the ceiling of {ceiling} candidates at arity {arity}")]
    CountCeiling { arity: usize, ceiling: u64 },

    #[error("inclusion-exclusion monomial closure exceeded {0} elements")]
    GrowthGuard(usize),

    #[error("insufficient truncation order: {0}")]
    InsufficientOrder(String),

    #[error("coefficient of z^{index} gives {value}, which is not a non-negative integer dimension")]
    NonIntegral { index: usize, value: String },

    #[error("unknown built-in presentation `{0}`")]
    UnknownBuiltin(String),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
