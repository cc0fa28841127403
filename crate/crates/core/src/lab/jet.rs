use std::fmt;

use num_traits::Zero;

use super::error::LabError;
use crate::algebra::{linalg, Mono, Rat};
use crate::forms::PolyForm;

/// Jet-level verdict on a singular germ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JetVerdict {
    /// `j¹ω` vanishes on a codimension-2 linear space.
    Case1Product,
    /// `j¹ω` vanishes on a hyperplane; cases 2 and 3 are not separated by jets.
    Case2Or3Xdx,
    /// `j¹ω` vanishes on a linear space of codimension at least 3.
    HigherRank,
    Jet1Zero,
}

impl fmt::Display for JetVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JetVerdict::Case1Product => "case 1: product (j1 = x1*dx2 + x2*dx1 type)",
            JetVerdict::Case2Or3Xdx => "case 2 or 3: j1 = x*dx type (not separable at jet level)",
            JetVerdict::HigherRank => "linear part of rank >= 3",
            JetVerdict::Jet1Zero => "j1 = 0",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetClass {
    pub verdict: JetVerdict,
    pub jet1: PolyForm,
    /// Rank of the coefficient matrix of `j¹ω`: the codimension of its zero set.
    pub rank: usize,
    /// Whether `j¹ω` is closed (symmetric coefficient matrix).
    pub closed: bool,
}

/// Trichotomy from the rank of the linear part of `ω` at the origin.
pub fn jet_classify(omega: &PolyForm) -> Result<JetClass, LabError> {
    if omega.grade() != 1 {
        return Err(crate::forms::FormError::WrongGrade { expected: 1, got: omega.grade() }.into());
    }
    let n = omega.ring().nvars();
    if !omega.eval(&vec![Rat::zero(); n]).is_empty() {
        return Err(LabError::NotSingularAtOrigin);
    }
    let jet1 = omega.homogeneous_part(1);
    let coeffs = jet1.coefficients();
    let m: Vec<Vec<Rat>> = coeffs.iter().map(|c| (0..n).map(|j| c.coeff(&Mono::var(n, j, 1))).collect()).collect();
    let rank = linalg::rank(&m, n);
    let closed = (0..n).all(|i| (0..n).all(|j| m[i][j] == m[j][i]));
    let verdict = match rank {
        0 => JetVerdict::Jet1Zero,
        1 => JetVerdict::Case2Or3Xdx,
        2 => JetVerdict::Case1Product,
        _ => JetVerdict::HigherRank,
    };
    Ok(JetClass { verdict, jet1, rank, closed })
}
