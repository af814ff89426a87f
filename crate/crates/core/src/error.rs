use thiserror::Error;

/// Errors raised by the max-plus routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix dimensions must be positive")]
    EmptyMatrix,

    #[error("vector must be finite (entry {index} is -inf)")]
    NonFiniteVector { index: usize },

    #[error("the null vector is not allowed here")]
    NullVector,

    #[error("the null matrix is not allowed here")]
    NullMatrix,

    #[error("matrix is acyclic (maximum cycle mean is -inf)")]
    Acyclic,

    #[error("Kleene star diverges: maximum cycle mean {0} is positive")]
    PositiveCycleMean(String),

    #[error("graph is not completely reducible: arc ({0}, {1}) joins two components")]
    NotCompletelyReducible(usize, usize),

    #[error("component is trivial (single node without loop)")]
    TrivialComponent,

    #[error("at least one generator is required")]
    NoGenerators,

    #[error("enumeration budget exceeded: {needed} products needed, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A post-condition that the theory guarantees did not hold.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
