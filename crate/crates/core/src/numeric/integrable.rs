//! Six-vertex R-matrix, Yang-Baxter residual and commuting transfer matrices.

use num_complex::Complex;
use num_traits::Zero;

use crate::chain::library::basic_u1;
use crate::classifier::{circuit_depth_witness, LayeredCircuit};

use super::mpo::{contract_mpo, dense_layered_periodic, MpoTensor};
use super::{DenseError, DenseOperator, Scalar};

/// Symmetric trigonometric six-vertex R-matrix with weights
/// `a = sin(lambda + 2 eta)`, `b = sin(lambda)`, `c = sin(2 eta)`, so that
/// `Delta = cos(2 eta)` and `R(0) = c P`.
pub fn xxz_rmatrix<T: Scalar>(lambda: T, eta: T) -> DenseOperator<T> {
    let two = T::one() + T::one();
    let a = Complex::new((lambda + two * eta).sin(), T::zero());
    let b = Complex::new(lambda.sin(), T::zero());
    let c = Complex::new((two * eta).sin(), T::zero());
    let mut r = DenseOperator::zeros(2).expect("two sites");
    r.set(0, 0, a);
    r.set(3, 3, a);
    r.set(1, 1, b);
    r.set(2, 2, b);
    r.set(1, 2, c);
    r.set(2, 1, c);
    r
}

/// Max-norm of `R12(l-m) R13(l) R23(m) - R23(m) R13(l) R12(l-m)`.
pub fn ybe_residual<T: Scalar>(lambda: T, mu: T, eta: T) -> T {
    let id = DenseOperator::<T>::identity(3).expect("three sites");
    let r12 = id.apply_left(&xxz_rmatrix(lambda - mu, eta), &[0, 1]);
    let r13 = id.apply_left(&xxz_rmatrix(lambda, eta), &[0, 2]);
    let r23 = id.apply_left(&xxz_rmatrix(mu, eta), &[1, 2]);
    let lhs = r12.matmul(&r13).matmul(&r23);
    let rhs = r23.matmul(&r13).matmul(&r12);
    lhs.max_abs_diff(&rhs)
}

/// `T(lambda) = tr_a R_{a,L}(lambda) ... R_{a,1}(lambda)` as a periodic MPO
/// whose virtual index is the auxiliary space.
pub fn transfer_matrix<T: Scalar>(
    lambda: T,
    eta: T,
    sites: usize,
) -> Result<DenseOperator<T>, DenseError> {
    let r = xxz_rmatrix(lambda, eta);
    let mut m = MpoTensor::zeros(2, 2);
    for i in 0..2 {
        for j in 0..2 {
            for l in 0..2 {
                for rr in 0..2 {
                    // aux transposed so that the left-to-right product is R_L ... R_1
                    m.set(i, j, l, rr, r.get(rr * 2 + i, l * 2 + j));
                }
            }
        }
    }
    contract_mpo(&vec![m; sites], None)
}

/// The same transfer matrix built on `1 + L` sites with the auxiliary space
/// first, then traced out.
pub fn transfer_matrix_direct<T: Scalar>(
    lambda: T,
    eta: T,
    sites: usize,
) -> Result<DenseOperator<T>, DenseError> {
    let r = xxz_rmatrix(lambda, eta);
    let mut mono = DenseOperator::identity(sites + 1)?;
    for n in 1..=sites {
        mono = mono.apply_left(&r, &[0, n]);
    }
    let half = 1usize << sites;
    let mut out = DenseOperator::zeros(sites)?;
    for i in 0..half {
        for j in 0..half {
            out.set(i, j, mono.get(i, j) + mono.get(half + i, half + j));
        }
    }
    Ok(out)
}

/// `max |[T(lambda), T(mu)]|`.
pub fn transfer_matrix_commutation<T: Scalar>(
    eta: T,
    sites: usize,
    lambda: T,
    mu: T,
) -> Result<T, DenseError> {
    let a = transfer_matrix(lambda, eta, sites)?;
    let b = transfer_matrix(mu, eta, sites)?;
    Ok(a.commutator(&b).max_abs())
}

/// Circuit witness of the `U1` staircase, placed on a ring.
pub fn periodic_u1_circuit() -> LayeredCircuit {
    circuit_depth_witness(&basic_u1()).expect("U1 has a finite-depth witness")
}

/// Commutator residual of `M T(lambda) M^dagger` and `M T(mu) M^dagger` with
/// `M` the periodic `U1` circuit.
pub fn conjugated_transfer_commutation<T: Scalar>(
    eta: T,
    sites: usize,
    lambda: T,
    mu: T,
) -> Result<T, DenseError> {
    let m = dense_layered_periodic::<T>(&periodic_u1_circuit(), sites)?;
    let a = m.conjugate(&transfer_matrix(lambda, eta, sites)?);
    let b = m.conjugate(&transfer_matrix(mu, eta, sites)?);
    Ok(a.commutator(&b).max_abs())
}

/// `R(0)` is proportional to the swap.
pub fn regularity_residual<T: Scalar>(eta: T) -> T {
    let r0 = xxz_rmatrix(T::zero(), eta);
    let c = r0.get(1, 2);
    let mut swap = DenseOperator::zeros(2).expect("two sites");
    for (r, col) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
        swap.set(r, col, c);
    }
    if c.is_zero() {
        return r0.max_abs();
    }
    r0.max_abs_diff(&swap)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ybe_holds() {
        assert!(ybe_residual(0.3f64, 0.7, 0.5) < 1e-12);
        assert!(ybe_residual(0.4f64, 0.4, 0.5) < 1e-12);
    }

    #[test]
    fn mpo_transfer_matches_direct() {
        for l in [1, 2, 4] {
            let a = transfer_matrix(0.37f64, 0.41, l).unwrap();
            let b = transfer_matrix_direct(0.37f64, 0.41, l).unwrap();
            assert!(a.max_abs_diff(&b) < 1e-13, "L={l}");
        }
    }

    #[test]
    fn transfer_matrices_are_nontrivial() {
        let t = transfer_matrix(0.42f64, 0.35, 6).unwrap();
        let x0 = DenseOperator::pauli(&crate::pauli::ps("X@0"), 6).unwrap();
        assert!(t.commutator(&x0).max_abs() > 1e-3);
        let m = dense_layered_periodic::<f64>(&periodic_u1_circuit(), 6).unwrap();
        assert!(m.conjugate(&t).max_abs_diff(&t) > 1e-3);
        assert!(m.unitarity_defect() < 1e-13);
    }

    #[test]
    fn single_site_trace_commutes() {
        assert!(transfer_matrix_commutation(0.35f64, 1, 0.2, 0.9).unwrap() < 1e-15);
    }

    #[test]
    fn regular_at_zero() {
        assert!(regularity_residual(0.5f64) < 1e-15);
    }
}
