use thiserror::Error;

/// Errors surfaced to callers. Internal invariant violations (a non-divisible
/// divided-difference numerator, a left key that is not a key, ...) panic
/// instead: they indicate a bug, not bad input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("not a short ribbon: {reason} at cells {cells:?}")]
    Ribbon {
        reason: &'static str,
        cells: Vec<(usize, usize)>,
    },

    #[error("not in span: graded piece beta^{beta} of x-degree {degree} is not spanned by the {basis} basis in {vars} variables")]
    NotInSpan {
        basis: &'static str,
        beta: usize,
        degree: usize,
        vars: usize,
    },

    #[error("cache: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
