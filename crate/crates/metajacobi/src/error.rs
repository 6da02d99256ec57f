use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("gamma function pole at {0}")]
    Pole(String),
    #[error("degenerate denominator {what} at index {index}")]
    Degenerate { what: &'static str, index: usize },
    #[error("division by zero in {0}")]
    DivisionByZero(&'static str),
    #[error("series did not converge within {terms} terms")]
    NoConvergence { terms: usize },
    #[error("argument outside the domain: {0}")]
    Domain(String),
    #[error("operator degree {degree} exceeds the cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),
}

pub type Result<T> = std::result::Result<T, Error>;
