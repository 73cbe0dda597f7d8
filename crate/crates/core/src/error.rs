use thiserror::Error;

/// Errors raised by the construction and verification routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dim { expected: usize, found: usize },

    #[error("index {index} out of range {lo}..={hi}")]
    Index { index: usize, lo: usize, hi: usize },

    #[error("non-finite matrix entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("malformed matrix literal: {0}")]
    Literal(String),

    #[error("basis error: {0}")]
    Basis(String),

    #[error("invalid parameter: {0}")]
    Param(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error(
        "commutator [V^{mu}, A^{i}] leaves the span of the vector matrices (residual {residual:e})"
    )]
    NotVClosed { mu: usize, i: usize, residual: f64 },

    #[error("upper and lower block coefficients disagree for (mu={mu}, i={i}) by {diff:e}")]
    InconsistentBlocks { mu: usize, i: usize, diff: f64 },

    #[error("transform is not real: largest imaginary part {imag:e}")]
    Purity { imag: f64 },

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
