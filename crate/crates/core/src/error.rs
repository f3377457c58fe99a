use thiserror::Error;

/// Errors raised by group construction, table computation and checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element enumeration exceeded the budget of {limit} elements")]
    BudgetExceeded { limit: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("generators act on different point counts ({expected} vs {found})")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("conductor {from} does not divide {to}")]
    ConductorMismatch { from: u32, to: u32 },

    #[error("eigenspace splitting stalled: {0}")]
    SplitFailure(String),

    #[error("lifted coefficient {value} outside [0, {degree}] for row {row}, class {class}")]
    LiftOutOfRange {
        row: usize,
        class: usize,
        value: u64,
        degree: u64,
    },

    #[error("table verification failed: {0}")]
    VerificationFailure(String),

    #[error("class set is not one of the computed normal subgroups")]
    NotNormal,

    #[error("element {0} of the subgroup is not in the ambient group")]
    NotSubgroup(String),

    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("no degree-set prediction for {0}")]
    Unsupported(String),

    #[error("catalog line {line}: {message}")]
    Catalog { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
