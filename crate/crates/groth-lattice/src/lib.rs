//! Canonical Grothendieck polynomials from solvable lattice models.
//!
//! The crate computes `G^(a,b)_λ`, `g^(a,b)_λ`, `j_λ` and their inhomogeneous
//! variants as exact rational functions by summing over row-transfer-matrix
//! chains, and checks the integrability relations behind them (RLL,
//! eigenvector, unitarity, inversion, commutation, Cauchy identities) as exact
//! identities on bounded label ranges.
//!
//! `no_std` with `alloc`; all arithmetic is exact.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod error;
pub mod identities;
pub mod models;
pub mod oracles;
pub mod partitions;
pub mod transfer;

pub use error::{Error, Result};
