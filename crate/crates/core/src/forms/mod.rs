//! Polynomial differential forms, vector fields and foliations on projective
//! 3-space.

pub mod error;
pub mod field;
pub mod foliation;
pub mod form;
#[cfg(test)]
mod tests;

pub use error::{FoliationError, FormError};
pub use field::{rot, PolyVectorField};
pub use foliation::{chart_images, chart_restrict, chart_ring, rehomogenize, validate_foliation, FoliationP3};
pub use form::{combinations, PolyForm};
