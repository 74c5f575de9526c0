//! Dense numerical cross-checks. Everything here is generic over the real
//! scalar (`f32` or `f64`); the symbolic layers stay exact.

mod dense;
mod integrable;
mod mpo;
mod spectrum;
mod synth;
mod verify;

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

pub use dense::{phase_value, DenseError, DenseOperator, MAX_SITES};
pub use integrable::{
    conjugated_transfer_commutation, periodic_u1_circuit, regularity_residual, transfer_matrix,
    transfer_matrix_commutation, transfer_matrix_direct, xxz_rmatrix, ybe_residual,
};
pub use mpo::{
    contract_mpo, dense_layered, dense_layered_periodic, dense_staircase, dense_transform,
    mpo_contract, staircase_tensors, MpoTensor,
};
pub use spectrum::{dense_hamiltonian, spectrum_check, SpectrumReport};
pub use synth::{synthesis_residual, synthesize_unitary};
pub use verify::{image_residual, run_checks, CheckResult, CHECK_NAMES, YBE_TRIPLES};

/// Real scalar for the dense layer.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
    /// Default tolerance for residuals computed in this precision.
    fn tolerance() -> Self;

    fn from_f64_lossy(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("finite value")
    }
}

impl Scalar for f32 {
    fn tolerance() -> Self {
        1e-4
    }
}

impl Scalar for f64 {
    fn tolerance() -> Self {
        1e-10
    }
}
