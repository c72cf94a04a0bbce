use thiserror::Error;

/// Errors shared across the scalar, matrix and spectral layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    /// The cyclic tridiagonal structure collapses for N <= 2: the
    /// sub/super/corner entries of an N x N cyclic matrix coincide.
    #[error("dimension N = {0} is degenerate; N >= 3 is required")]
    DegenerateDimension(usize),

    /// Two exact scalars from different cyclotomic fields were combined.
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u64, right: u64 },

    #[error("division by zero")]
    DivisionByZero,

    /// The exact backend stores the unnormalized transform only; 1/sqrt(N)
    /// is not an element of the cyclotomic field.
    #[error("normalized DFT is not representable in the exact backend")]
    UnsupportedNormalization,

    #[error("matrix is not Hermitian (deviation {deviation:e} exceeds tolerance {tolerance:e})")]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
