use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("image table is not a bijection")]
    NotAPermutation,
    #[error("subgroup is not contained in the parent group")]
    NotSubgroup,
    #[error("subgroup is not normal in the parent group")]
    NotNormal,
    #[error("{what} budget exceeded: {value} > {limit}")]
    BudgetExceeded {
        what: &'static str,
        value: u64,
        limit: u64,
    },
    #[error("time limit of {0:?} exceeded")]
    TimeLimit(std::time::Duration),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Budget and time-limit failures, as opposed to bad input.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. } | Error::TimeLimit(_))
    }
}
