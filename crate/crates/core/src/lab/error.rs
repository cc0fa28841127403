use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::forms::{FoliationError, FormError};
use crate::ideal::IdealError;
use crate::residue::ResidueError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("component {component}: scheme generator {generator} is not in the component ideal")]
    NotContained { component: String, generator: String },
    #[error("component {component}: parametrization does not lie on generator {generator}")]
    ParamOffComponent { component: String, generator: String },
    #[error("component {component}: parametrization must be four binary forms of one degree")]
    BadParam { component: String },
    #[error("component {component}: parametrization degree {param} differs from curve degree {curve}")]
    ParamDegree { component: String, param: u32, curve: u64 },
    #[error("component {component} is not a curve (projective dimension {dim})")]
    NotACurve { component: String, dim: i64 },
    #[error("component {0} has no parametrization")]
    NoParam(String),
    #[error("component {0} is entirely non-Kupka: every pullback of d omega vanishes")]
    EntirelyNonKupka(String),
    #[error("point {0} is not a singular point of the foliation")]
    NotSingular(String),
    #[error("arithmetic genus is undefined (projective dimension {0})")]
    GenusUndefined(i64),
    #[error("residual scheme is not zero-dimensional (projective dimension {0})")]
    ResidualNotZeroDimensional(i64),
    #[error("form does not vanish at the origin")]
    NotSingularAtOrigin,
    #[error("eta vanishes at the origin; singular germs have no regular first integral here")]
    EtaVanishes,
    #[error("first-integral system is inconsistent at degree {0} (input not integrable)")]
    FirstIntegralInconsistent(u32),
    #[error("rot(omega) does not have an isolated zero at the origin")]
    RotNotIsolated,
    #[error("omega(rot omega) is not zero: the form is not integrable")]
    NotIntegrable,
    #[error("i_X i_S dV = omega has no solution through degree {0}")]
    KoszulUnsolvable(u32),
    #[error("expected a form in {expected} variables, got {got}")]
    WrongVariableCount { expected: usize, got: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Foliation(#[from] FoliationError),
    #[error(transparent)]
    Residue(#[from] ResidueError),
}
