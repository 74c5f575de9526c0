//! Translation-invariant Clifford transformations of spin-1/2 chains.
//!
//! Exact symbolic Pauli and tableau algebra, staircase transforms with
//! locality classification, Hamiltonian rewriting, and a dense numerical
//! backend (generic over `f32`/`f64`) used to cross-check the symbolic results.

pub mod chain;
pub mod classifier;
pub mod cli;
pub mod clifford;
pub mod hamiltonian;
pub mod numeric;
pub mod pauli;

pub use numeric::{DenseOperator, Scalar};

pub type DenseOperator64 = numeric::DenseOperator<f64>;
pub type DenseOperator32 = numeric::DenseOperator<f32>;
