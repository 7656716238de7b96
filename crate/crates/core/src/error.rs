use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("not nilpotent: power {0} is still nonzero")]
    NotNilpotent(usize),
    #[error("not closed under the bracket: [{0}, {1}] leaves the subspace")]
    NotClosed(usize, usize),
    #[error("not semisimple: {0}")]
    NotSemisimple(String),
}

pub type Result<T> = std::result::Result<T, Error>;
