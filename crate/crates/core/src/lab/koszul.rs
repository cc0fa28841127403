use num_traits::Zero;

use super::error::LabError;
use super::integral::{flatten, monomials_of_degree, solve_columns};
use super::LabConfig;
use crate::algebra::{MPoly, Rat};
use crate::forms::{rot, PolyForm, PolyVectorField};
use crate::ideal::cancel::checkpoint;
use crate::ideal::{local_multiplicity_with_cap, Ideal};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoszulPair {
    pub x: PolyVectorField,
    pub s: PolyVectorField,
    pub cap: u32,
    /// `ω - i_X i_S dV`, all of whose terms have degree above the cap.
    pub remainder: PolyForm,
    pub omega_of_x: MPoly,
    pub omega_of_s: MPoly,
}

/// `X = rot ω` and a field `S` of degree `< cap` with `i_X i_S dV ≡ ω` through
/// degree `cap`, found as one linear system per degree bound.
pub fn koszul_generators(omega: &PolyForm, cfg: &LabConfig) -> Result<KoszulPair, LabError> {
    let cap = cfg.koszul_cap;
    let ring = omega.ring().clone();
    if ring.nvars() != 3 {
        return Err(LabError::WrongVariableCount { expected: 3, got: ring.nvars() });
    }
    let x = rot(omega)?;
    let origin = vec![Rat::zero(); 3];
    let mult = local_multiplicity_with_cap(&Ideal::new(&ring, x.components().to_vec()), &origin, cfg.mora_cap)?;
    if mult.finite().is_none() {
        return Err(LabError::RotNotIsolated);
    }
    let omega_of_x = omega.contract(&x)?.as_function();
    if !omega_of_x.is_zero() {
        return Err(LabError::NotIntegrable);
    }
    let vol = PolyForm::volume(&ring);
    let target = omega.truncate(cap);
    let mut solution = None;
    for bound in 1..=cap {
        checkpoint()?;
        let mut unknowns = Vec::new();
        for comp in 0..3 {
            for deg in 0..bound {
                for mu in monomials_of_degree(3, deg) {
                    unknowns.push((comp, MPoly::monomial(&ring, mu, Rat::from_integer(1.into()))));
                }
            }
        }
        let columns: Vec<_> = unknowns
            .iter()
            .map(|(comp, mono)| {
                let mut comps = vec![MPoly::zero(&ring); 3];
                comps[*comp] = mono.clone();
                let s = PolyVectorField::new(&ring, comps);
                flatten(&vol.contract(&s).unwrap().contract(&x).unwrap().truncate(bound))
            })
            .collect();
        let sol = solve_columns(&columns, &flatten(&target.truncate(bound))).ok_or(LabError::KoszulUnsolvable(bound))?;
        solution = Some((unknowns, sol));
    }
    let (unknowns, sol) = solution.ok_or(LabError::KoszulUnsolvable(0))?;
    let mut comps = vec![MPoly::zero(&ring); 3];
    for ((comp, mono), c) in unknowns.iter().zip(sol) {
        comps[*comp] = &comps[*comp] + &mono.scale(&c);
    }
    let s = PolyVectorField::new(&ring, comps);
    let remainder = omega.sub(&vol.contract(&s)?.contract(&x)?)?;
    let omega_of_s = omega.contract(&s)?.as_function();
    Ok(KoszulPair { x, s, cap, remainder, omega_of_x, omega_of_s })
}
