use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by evaluation, series and certification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole of the gamma function at x = {x}")]
    Pole { x: f64 },

    #[error("gamma({x}) overflows f64")]
    Overflow { x: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported parameters: {0}")]
    UnsupportedParams(String),

    #[error("f'(z) is numerically zero at z = {z}")]
    NearZeroDerivative { z: Complex64 },

    #[error("power-series division breakdown: leading coefficient of the divisor is zero")]
    DivisionBreakdown,

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    #[error("division by zero at z = {z}")]
    DivisionByZero { z: Complex64 },

    #[error("evaluation failed at z = {z}: {source}")]
    Evaluation {
        z: Complex64,
        #[source]
        source: Box<Error>,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Wraps an error with the grid point at which it happened.
    pub fn at(self, z: Complex64) -> Error {
        match self {
            e @ Error::Evaluation { .. } => e,
            e => Error::Evaluation { z, source: Box::new(e) },
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
