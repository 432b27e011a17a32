//! Exact resultants for the gradient systems of symmetric cubic forms.
//!
//! A symmetric cubic in `n >= 3` variables is written uniquely as
//! `A1*s1^3 + A2*s1*s2 + A3*s3` in the elementary symmetric polynomials.
//! This crate evaluates the resultant of its `n` partial derivatives three
//! independent ways and keeps them honest against each other:
//!
//! - [`closedform::resultant_boxed`]: the closed product over `k = 0..n-1`
//!   in the parameters `(B1, B2, B3)`, total on every stratum.
//! - [`closedform::resultant_via_scaling`]: the derivation chain through the
//!   reduced system `x_i^2 + 2A x_i s1 + B s1^2` and a product over sign
//!   vectors in a quadratic extension.
//! - [`oracle::macaulay_resultant`]: a general Macaulay-matrix resultant
//!   with fraction-free determinants.
//!
//! When the resultant vanishes, [`oracle::root_witness`] produces an explicit
//! nonzero common root. The [`finsler`] module answers indicatrix degeneracy
//! and configuratrix solvability questions on top of these.
//!
//! Everything is exact rational arithmetic. The crate is `no_std` and only
//! needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod closedform;
pub mod error;
pub mod finsler;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod quad;
pub mod scalar;
pub mod symcubic;

pub use closedform::{resultant_boxed, resultant_via_scaling, ResultantReport};
pub use error::{Error, Result};
pub use poly::{elem_sym, MultiPoly};
pub use quad::QuadExt;
pub use scalar::Scalar;
pub use symcubic::SymmetricCubic;
