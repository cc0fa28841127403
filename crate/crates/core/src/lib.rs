//! Exact algebra for the singular set of codimension-one foliations on
//! projective 3-space.

pub mod algebra;
pub mod forms;
pub mod ideal;
pub mod lab;
pub mod residue;
