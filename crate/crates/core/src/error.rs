use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error in {func}: {detail}")]
    Domain { func: &'static str, detail: String },

    #[error("pole of {func} at {at}")]
    Pole { func: &'static str, at: f64 },

    #[error("jet mismatch: {0}")]
    JetMismatch(String),

    #[error("derivative order ({a}, {b}) outside jet orders ({ox}, {oz})")]
    OrderOutOfRange { a: usize, b: usize, ox: usize, oz: usize },

    #[error("non-finite term at index {index}: {value}")]
    NonFiniteTerm { index: u64, value: f64 },

    #[error("tail is not monotone at t = {at}")]
    NonMonotoneTail { at: f64 },

    #[error("series diverges: {0}")]
    Divergent(String),
}

impl Error {
    pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain { func, detail: detail.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
