//! Independent ground truth: Macaulay and Sylvester resultants, and explicit
//! common roots of the symmetric gradient systems.

mod macaulay;
mod sylvester;
mod witness;

pub use macaulay::{
    macaulay_resultant, macaulay_resultant_seeded, substitution_matrix, MacaulayOutcome,
    MacaulaySystem, Route, Substitution, DEFAULT_SEED, MAX_MATRIX_ENTRIES, MAX_RETRIES,
};
pub use sylvester::sylvester_resultant;
pub use witness::{
    rational_witness, root_witness, verify_witness, RootWitness, TwoValuePattern, WitnessField,
};

use crate::error::Result;
use crate::scalar::Scalar;
use crate::symcubic::SymmetricCubic;

/// Macaulay resultant of the gradient system of `sc`.
pub fn gradient_resultant(sc: &SymmetricCubic, seed: u64) -> Result<MacaulayOutcome> {
    let n = sc.n();
    let sys = MacaulaySystem::new(sc.gradient_system(), alloc::vec![2; n])?;
    macaulay_resultant_seeded(&sys, seed)
}

/// Shorthand for the value of [`gradient_resultant`] with the default seed.
pub fn gradient_resultant_value(sc: &SymmetricCubic) -> Result<Scalar> {
    gradient_resultant(sc, DEFAULT_SEED).map(|o| o.value)
}
