use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::forms::FormError;
use crate::ideal::IdealError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResidueError {
    #[error("expected polynomials in {expected} variable(s), got {got}")]
    WrongVariableCount { expected: usize, got: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("degenerate linear part (det DX = 0); use the Grothendieck residue")]
    Degenerate,
    #[error("the origin is not a common zero of P and Q")]
    NotAZero,
    #[error("P and Q do not cut out a zero-dimensional scheme")]
    NotZeroDimensional,
    #[error("no exponent N <= {0} with x^N, y^N in the local ideal")]
    ExponentCapExceeded(u32),
    #[error("degree {0} is odd: (d+2)/2 is not an integer")]
    OddDegree(i64),
    #[error("point is not on the component: generator {0} does not vanish")]
    PointOffComponent(String),
    #[error("component is singular at the chosen point")]
    SingularComponentPoint,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Form(#[from] FormError),
}
