use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("computation cancelled")]
    Cancelled,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("ideal is not zero-dimensional (dimension {0})")]
    NotZeroDimensional(i64),
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("ring mismatch between ideals")]
    RingMismatch,
}
