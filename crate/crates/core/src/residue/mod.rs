//! Baum-Bott residues, Grothendieck residues and truncated characteristic
//! classes.

pub mod classes;
pub mod error;
pub mod local;
pub mod transversal;
#[cfg(test)]
mod tests;

pub use classes::{chern_character_rank2, chern_radial, euler_char_rrh, todd_p2, TruncCohElem};
pub use error::ResidueError;
pub use local::{
    bb_grothendieck, bb_nondegenerate, bb_residue, bb_sum_check, grothendieck_residue_2d, univariate_residue, BBResidue,
    LocalModel2D, ResidueMethod, SumCheck, MAX_RESIDUE_EXPONENT,
};
pub use transversal::{transversal_model, TransversalSlice};
