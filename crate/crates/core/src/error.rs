use thiserror::Error;

/// Errors raised by the q-arithmetic, series and table layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("q = {0} is not allowed (q must differ from 0 and 1)")]
    InvalidQ(String),

    #[error("q-binomial [{n} {k}] is out of range (need 0 <= k <= n)")]
    BinomialOutOfRange { n: i64, k: i64 },

    #[error("negative argument {value} for {what}")]
    NegativeArgument { what: &'static str, value: i64 },

    #[error("series is not invertible: constant coefficient is zero or not a constant")]
    NotInvertible,

    #[error("coefficient index {index} exceeds truncation order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
