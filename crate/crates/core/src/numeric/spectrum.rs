//! Spectra of open-chain Hamiltonians before and after a transform.

use nalgebra::RealField;
use num_complex::Complex;
use num_traits::Float;
use serde::Serialize;

use crate::chain::Transform;
use crate::hamiltonian::{Params, TIHamiltonian};
use crate::pauli::PauliString;

use super::{dense_transform, DenseError, DenseOperator, Scalar};

/// `sum_a J_a P_a` on `sites` sites.
pub fn dense_hamiltonian<T: Scalar>(
    terms: &[(f64, PauliString)],
    sites: usize,
) -> Result<DenseOperator<T>, DenseError> {
    let mut h = DenseOperator::zeros(sites)?;
    for (j, p) in terms {
        let term =
            DenseOperator::pauli(p, sites)?.scale(Complex::new(T::from_f64_lossy(*j), T::zero()));
        h = &h + &term;
    }
    Ok(h)
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub sites: usize,
    /// Max deviation between sorted eigenvalues of the two dense matrices.
    pub spectral_deviation: f64,
    /// Max entrywise deviation between the symbolically transformed
    /// Hamiltonian and `U H U^dagger`.
    pub operator_deviation: f64,
}

fn sorted_eigenvalues<T: Scalar + RealField>(h: &DenseOperator<T>) -> Vec<T> {
    let mut ev: Vec<T> = h
        .to_nalgebra()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .collect();
    ev.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
    ev
}

/// Compares `sum J t(P)` (open-chain images with the literal boundary gates)
/// against `U H U^dagger` for every fully supported term of `h`.
pub fn spectrum_check<T: Scalar + RealField>(
    h: &TIHamiltonian,
    t: &Transform,
    sites: usize,
    params: &Params,
) -> Result<SpectrumReport, DenseError> {
    let terms = h.open_chain_terms(sites, params);
    let last = sites as i64 - 1;
    let images: Vec<(f64, PauliString)> = terms
        .iter()
        .map(|(j, p)| (*j, t.conjugate_open(p, 0, last)))
        .collect();
    let u = dense_transform::<T>(t, sites)?;
    let before = dense_hamiltonian::<T>(&terms, sites)?;
    let after = dense_hamiltonian::<T>(&images, sites)?;
    let conj = u.conjugate(&before);
    let spectral = sorted_eigenvalues(&after)
        .iter()
        .zip(sorted_eigenvalues(&conj))
        .fold(T::zero(), |m, (a, b)| Float::max(m, Float::abs(*a - b)));
    let to_f64 = |x: T| num_traits::ToPrimitive::to_f64(&x).unwrap_or(f64::NAN);
    Ok(SpectrumReport {
        sites,
        spectral_deviation: to_f64(spectral),
        operator_deviation: to_f64(after.max_abs_diff(&conj)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::library::basic_u1;
    use crate::hamiltonian::models::xxz;

    #[test]
    fn xxz_u1_small() {
        let r = spectrum_check::<f64>(
            &xxz(),
            &Transform::staircase(basic_u1()),
            5,
            &Params::xxz(0.5, 0.0),
        )
        .unwrap();
        assert!(
            r.spectral_deviation < 1e-10 && r.operator_deviation < 1e-12,
            "{r:?}"
        );
    }

    #[test]
    fn zero_hamiltonian() {
        let h = TIHamiltonian::new("zero", vec![]);
        let r = spectrum_check::<f64>(&h, &Transform::staircase(basic_u1()), 4, &Params::default())
            .unwrap();
        assert_eq!(r.spectral_deviation, 0.0);
    }
}
