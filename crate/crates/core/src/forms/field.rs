use std::fmt;

use super::error::FormError;
use super::form::PolyForm;
use crate::algebra::{poly::same_ring, MPoly, Rat, RingRef};

/// A polynomial vector field `Σ X_i ∂/∂x_i`.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyVectorField {
    ring: RingRef,
    comps: Vec<MPoly>,
}

impl PolyVectorField {
    pub fn new(ring: &RingRef, comps: Vec<MPoly>) -> Self {
        assert_eq!(comps.len(), ring.nvars(), "one component per variable");
        assert!(comps.iter().all(|c| same_ring(c.ring(), ring)), "component outside the ring");
        PolyVectorField { ring: ring.clone(), comps }
    }

    /// The Euler field `Σ x_i ∂/∂x_i`.
    pub fn radial(ring: &RingRef) -> Self {
        Self::new(ring, (0..ring.nvars()).map(|i| MPoly::var(ring, i)).collect())
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn components(&self) -> &[MPoly] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(&self.ring, self.comps.iter().map(|p| p.scale(c)).collect())
    }

    /// `X(f) = Σ X_i ∂f/∂x_i`.
    pub fn apply(&self, f: &MPoly) -> MPoly {
        self.comps.iter().enumerate().fold(MPoly::zero(&self.ring), |acc, (i, c)| &acc + &(c * &f.partial(i)))
    }

    /// Rows `∂X_i/∂x_j`.
    pub fn jacobian(&self) -> Vec<Vec<MPoly>> {
        self.comps.iter().map(|c| (0..self.ring.nvars()).map(|j| c.partial(j)).collect()).collect()
    }

    pub fn eval(&self, point: &[Rat]) -> Vec<Rat> {
        self.comps.iter().map(|c| c.eval(point)).collect()
    }

    pub fn translate(&self, a: &[Rat]) -> Self {
        Self::new(&self.ring, self.comps.iter().map(|c| c.translate(a)).collect())
    }

    pub fn truncate(&self, cap: u32) -> Self {
        Self::new(&self.ring, self.comps.iter().map(|c| c.truncate(cap)).collect())
    }
}

impl fmt::Display for PolyVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.comps.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for PolyVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyVectorField{self}")
    }
}

/// The field `X` with `i_X dx∧dy∧dz = dω` for a 1-form in three variables.
pub fn rot(omega: &PolyForm) -> Result<PolyVectorField, FormError> {
    let n = omega.ring().nvars();
    if n != 3 {
        return Err(FormError::WrongVariableCount { expected: 3, got: n });
    }
    if omega.grade() != 1 {
        return Err(FormError::WrongGrade { expected: 1, got: omega.grade() });
    }
    let d = omega.ext_d()?;
    Ok(PolyVectorField::new(omega.ring(), vec![d.component(&[1, 2]), -d.component(&[0, 2]), d.component(&[0, 1])]))
}
