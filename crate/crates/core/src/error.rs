use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("gamma function pole at x = {0}")]
    Pole(f64),
    #[error("argument outside the domain: {0}")]
    Domain(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("series did not converge within {terms} terms")]
    Convergence { terms: usize },
    #[error("parameter constraint violated: {0}")]
    Constraint(String),
    #[error("order {order} aliases on a grid of {samples} samples")]
    Aliasing { order: usize, samples: usize },
    #[error("finite-difference stencil leaves the disk at {0}")]
    Stencil(String),
    #[error("outside the parameter regime of the estimate: {0}")]
    Regime(String),
    #[error("malformed boundary document: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
