use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::ideal::IdealError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("forms live in different rings")]
    RingMismatch,
    #[error("grade {grade} exceeds the dimension {n}")]
    GradeOverflow { grade: usize, n: usize },
    #[error("contraction needs a form of positive grade")]
    GradeZero,
    #[error("expected a form of grade {expected}, got grade {got}")]
    WrongGrade { expected: usize, got: usize },
    #[error("expected {expected} variables, got {got}")]
    WrongVariableCount { expected: usize, got: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Reasons a 1-form is rejected as a foliation on projective 3-space.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoliationError {
    #[error(transparent)]
    Shape(#[from] FormError),
    #[error("the zero form does not define a foliation")]
    ZeroForm,
    #[error("coefficient of d{var} is not homogeneous of degree {expected}")]
    NotHomogeneous { var: String, expected: u32 },
    #[error("Euler condition fails: i_R omega = {0}")]
    EulerFails(String),
    #[error("not integrable: omega ^ d omega has nonzero coefficient {0}")]
    NotIntegrable(String),
    #[error("singular scheme has a codimension-one part (common factor of projective dimension {0})")]
    CodimensionOne(i64),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}
