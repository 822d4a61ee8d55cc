//! Exact linear algebra over the rationals.
//!
//! Everything above this module talks to the field only through [`Scalar`]
//! and [`Matrix`], so swapping in a prime field means replacing this module.

mod matrix;
mod scalar;

pub use matrix::{complement_basis, Coordinates, Matrix, Vector};
pub use scalar::Scalar;

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LinError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("input vectors are linearly dependent")]
    Dependent,
    #[error("not a rational number: {0:?}")]
    ParseScalar(String),
}

/// Standard basis vector `e_i` of `k^n`.
pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}
