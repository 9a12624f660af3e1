//! Exact arithmetic for Langlands lambda-functions of tamely ramified
//! quadratic extensions of p-adic fields.
//!
//! Everything is reduced to finite computations: quadratic Gauss sums over
//! residue fields, squareness tests, and trace residues. Values are exact
//! fourth roots of unity or exact cyclotomic integers; floating point appears
//! only in independent cross-check oracles.

pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod finite_field;
pub mod gauss;
pub mod lambda;
pub mod local_field;
pub mod oracle;
pub mod verify;

pub use error::{Error, Result};
