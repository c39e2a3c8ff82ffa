use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("dimension {0} not supported for this operation")]
    UnsupportedDimension(usize),
    #[error("degenerate input not supported here: {0}")]
    Degenerate(String),
    #[error("epsilon must be nonnegative")]
    NegativeEps,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("extraction did not converge after {sweeps} sweeps")]
    NonConvergence { sweeps: usize },
    #[error("combinatorial budget exceeded: {states} states, budget {budget}")]
    BudgetExceeded { states: usize, budget: usize },
    #[error("scenario error: {0}")]
    Scenario(String),
}

pub type Result<T> = std::result::Result<T, Error>;
