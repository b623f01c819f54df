use thiserror::Error;

/// Crate-wide error type.
///
/// Variants fall into three classes, mirrored by the CLI exit codes:
/// invalid input (exit 2), exhausted resource budgets (exit 3), and
/// internal invariant violations that should never fire (exit 4).
#[derive(Debug, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyInput,

    #[error("gcd of the generators is {gcd}, not 1")]
    NotNumerical { gcd: u64 },

    #[error("the generators contain 1, so the semigroup is all of N and has no gaps")]
    TrivialSemigroup,

    #[error("generator {value} exceeds the configured maximum {max}")]
    GeneratorTooLarge { value: u64, max: u64 },

    #[error("membership table would need {required} entries (limit {max})")]
    TableTooLarge { required: u128, max: usize },

    #[error("{value} is not a positive member of the semigroup")]
    InvalidAperyBase { value: i64 },

    #[error("{alpha} is not a pseudo-Frobenius number of the semigroup")]
    NotPseudoFrobenius { alpha: i64 },

    #[error("matrix is not a row-factorization matrix: {reason}")]
    NotRfMatrix { reason: String },

    #[error("factorization search exceeded the node budget of {budget}")]
    EnumerationBudgetExceeded { budget: usize },

    #[error("row-factorization matrix count exceeds the cap of {cap}")]
    RfMatrixOverflow { cap: usize },

    #[error("Groebner completion exceeded the S-pair budget of {budget}")]
    CompletionBudgetExceeded { budget: usize },

    #[error("degree bound too small: witnesses fail to generate in degree {degree}")]
    BoundTooSmall { degree: u64 },

    #[error("embedding dimension {n} is below the required minimum of {min}")]
    EmbeddingDimensionTooSmall { n: usize, min: usize },

    #[error("top row degrees minus column weights are not constant")]
    NotEquidegree,

    #[error("theorem invariant violated (this is a bug, please report it): {0}")]
    TheoremViolation(String),

    #[error(
        "generator-count oracles disagree in degree {degree}: fiber graph {graph}, \
         linear algebra {linear} (this is a bug, please report it)"
    )]
    OracleMismatch {
        degree: u64,
        graph: usize,
        linear: usize,
    },
}

impl Error {
    /// Process exit code the CLI uses for this error.
    pub fn exit_code(&self) -> i32 {
        use Error::*;
        match self {
            EmptyInput
            | NotNumerical { .. }
            | TrivialSemigroup
            | GeneratorTooLarge { .. }
            | InvalidAperyBase { .. }
            | NotPseudoFrobenius { .. }
            | NotRfMatrix { .. }
            | EmbeddingDimensionTooSmall { .. }
            | NotEquidegree => 2,
            TableTooLarge { .. }
            | EnumerationBudgetExceeded { .. }
            | RfMatrixOverflow { .. }
            | CompletionBudgetExceeded { .. }
            | BoundTooSmall { .. } => 3,
            TheoremViolation(_) | OracleMismatch { .. } => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
