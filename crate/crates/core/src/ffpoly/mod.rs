//! Arithmetic in GF(p) and dense univariate polynomials over it.

mod field;
mod matrix;
pub(crate) mod mul;
mod poly;

pub use field::{FieldElement, PrimeField};
pub use matrix::FieldMatrix;
pub use poly::Poly;
