use thiserror::Error;

/// Everything that can go wrong while building datasets, curves and experiments.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("EmptyOrSingleton: need at least 2 observations, got {n}")]
    EmptyOrSingleton { n: usize },

    #[error("NonFiniteValue: observation at index {index} is {value}")]
    NonFiniteValue { index: usize, value: f64 },

    #[error("NonPositiveTotal: total resources must be positive, got {total}")]
    NonPositiveTotal { total: f64 },

    #[error("InvalidN: weights need n >= 2, got {n}")]
    InvalidN { n: usize },

    #[error("UnequalSpacing: population share at point {index} is {found}, expected {expected}")]
    UnequalSpacing {
        index: usize,
        found: f64,
        expected: f64,
    },

    #[error("BadEndpoint: last resource share must be 1, got {last}")]
    BadEndpoint { last: f64 },

    #[error("InvalidRanks: recipient rank {recipient} and donor rank {donor} (n = {n})")]
    InvalidRanks {
        recipient: usize,
        donor: usize,
        n: usize,
    },

    #[error("InvalidAmount: transfer amount must be positive and finite, got {amount}")]
    InvalidAmount { amount: f64 },

    #[error("RankViolation: {0}")]
    RankViolation(String),

    #[error("BadParams: {0}")]
    BadParams(String),
}

impl Error {
    /// True for the errors raised while validating a raw dataset.
    pub fn is_dataset_error(&self) -> bool {
        matches!(
            self,
            Error::EmptyOrSingleton { .. }
                | Error::NonFiniteValue { .. }
                | Error::NonPositiveTotal { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
