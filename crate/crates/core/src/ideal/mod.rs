//! Commutative algebra: Groebner bases, elimination, quotients, saturation,
//! Hilbert data and local multiplicities.

pub mod cancel;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod local;
pub mod ops;
pub(crate) mod spoly;
#[cfg(test)]
mod tests;

pub use cancel::CancelToken;
pub use error::IdealError;
pub use groebner::{groebner, lift, GroebnerBasis};
pub use hilbert::{hilbert_data, HilbertData};
pub use local::{local_multiplicity, local_multiplicity_with_cap, LocalMultiplicity, DEFAULT_MORA_CAP};
pub use ops::{
    affine_dimension, eliminate, intersect, quotient, quotient_by_element, radical_contains, saturate_by_element, saturation,
    saturation_by_quotients, zero_dim_degree,
};

use crate::algebra::{MPoly, MonomialOrder, RingRef};

/// A polynomial ideal given by generators.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<MPoly>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &RingRef, gens: Vec<MPoly>) -> Self {
        for g in &gens {
            assert!(crate::algebra::poly::same_ring(g.ring(), ring), "generator outside the ideal's ring");
        }
        Ideal { ring: ring.clone(), gens: gens.into_iter().filter(|g| !g.is_zero()).collect() }
    }

    pub fn unit(ring: &RingRef) -> Self {
        Ideal::new(ring, vec![MPoly::one(ring)])
    }

    /// The ideal generated by all variables.
    pub fn maximal_at_origin(ring: &RingRef) -> Self {
        Ideal::new(ring, (0..ring.nvars()).map(|i| MPoly::var(ring, i)).collect())
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[MPoly] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn grevlex(&self) -> Result<GroebnerBasis, IdealError> {
        groebner(self, &MonomialOrder::grevlex(self.ring.nvars()))
    }

    pub fn contains(&self, f: &MPoly) -> Result<bool, IdealError> {
        Ok(self.grevlex()?.contains(f))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool, IdealError> {
        let gb = other.grevlex()?;
        Ok(self.gens.iter().all(|g| gb.contains(g)))
    }

    /// First generator of `self` not contained in `other`.
    pub fn first_outside(&self, other: &Ideal) -> Result<Option<MPoly>, IdealError> {
        let gb = other.grevlex()?;
        Ok(self.gens.iter().find(|g| !gb.contains(g)).cloned())
    }

    pub fn same_as(&self, other: &Ideal) -> Result<bool, IdealError> {
        Ok(self.grevlex()? == other.grevlex()?)
    }

    pub fn is_unit(&self) -> Result<bool, IdealError> {
        Ok(self.grevlex()?.is_unit())
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn with_generator(&self, f: MPoly) -> Ideal {
        let mut gens = self.gens.clone();
        gens.push(f);
        Ideal::new(&self.ring, gens)
    }

    /// Apply a ring morphism to every generator.
    pub fn map(&self, target: &RingRef, images: &[MPoly]) -> Result<Ideal, IdealError> {
        let gens = self.gens.iter().map(|g| g.substitute(images)).collect::<Result<Vec<_>, _>>()?;
        Ok(Ideal::new(target, gens))
    }
}
