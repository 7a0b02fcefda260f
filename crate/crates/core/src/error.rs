use crate::poly::Polynomial;
use crate::rational::Rational;
use thiserror::Error;

/// Errors surfaced by the library. `InternalInvariant` signals a bug in the
/// solver, never bad user input.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("axis index {axis} out of range for dimension {dim}")]
    AxisOutOfRange { axis: usize, dim: usize },
    #[error("point of length {0} does not match dimension {1}")]
    PointLengthMismatch(usize, usize),
    #[error("invalid ellipsoid: {0}")]
    InvalidEllipsoid(String),
    #[error("S^-1 is undefined on polynomials with a nonzero constant term")]
    ConstantTermInSInverse,
    #[error("incompatible data: residual {residual}; subtracting the residual constant restores compatibility")]
    Incompatible {
        residual: Rational,
        /// f with the residual constant subtracted, when that adjustment applies.
        adjusted: Option<Polynomial>,
    },
    #[error("gauge violation: divergence of the input field is {divergence}, expected 0")]
    GaugeViolation { divergence: Polynomial },
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
    #[error("{0}")]
    Parse(#[from] ParseError),
}

/// Expression-parser error with source position (1-based line and column).
#[derive(Debug, Clone, Error)]
#[error("parse error at {line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

pub type Result<T> = std::result::Result<T, Error>;
