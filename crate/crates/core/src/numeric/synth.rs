//! Tableau to unitary via the stabilizer state of the first column.

use num_complex::Complex;
use num_traits::Zero;

use crate::clifford::CliffordTableau;
use crate::pauli::PauliString;

use super::{DenseError, DenseOperator, Scalar};

fn on_dense_sites(p: &PauliString) -> PauliString {
    // tableau sites are 1..=k, dense sites 0..k
    p.translate(-1)
}

/// Unitary `W` with `W P W^dagger = t(P)`, phase fixed so the first nonzero
/// entry of the first column is real and positive.
///
/// `W|0..0>` is the joint +1 eigenvector of the images of the `Z_i`, and
/// `W|x> = prod_i t(X_i)^{x_i} W|0..0>`.
pub fn synthesize_unitary<T: Scalar>(t: &CliffordTableau) -> Result<DenseOperator<T>, DenseError> {
    let k = t.k();
    let dim = 1usize << k;
    let zs: Vec<DenseOperator<T>> = (1..=k)
        .map(|i| DenseOperator::pauli(&on_dense_sites(t.img_z(i)), k))
        .collect::<Result<_, _>>()?;
    let xs: Vec<DenseOperator<T>> = (1..=k)
        .map(|i| DenseOperator::pauli(&on_dense_sites(t.img_x(i)), k))
        .collect::<Result<_, _>>()?;

    // projector onto the common +1 eigenspace (rank one)
    let half = Complex::new(T::from_f64_lossy(0.5), T::zero());
    let id = DenseOperator::identity(k)?;
    let mut proj = id.clone();
    for z in &zs {
        proj = proj.matmul(&(&id + z).scale(half));
    }
    // the diagonal entry |psi_c|^2 is largest for the best-conditioned column
    let best = (0..dim)
        .max_by(|&a, &b| {
            proj.get(a, a)
                .re
                .partial_cmp(&proj.get(b, b).re)
                .expect("finite")
        })
        .expect("dim >= 1");
    let col: Vec<Complex<T>> = (0..dim).map(|r| proj.get(r, best)).collect();
    let norm = col.iter().fold(T::zero(), |s, e| s + e.norm_sqr()).sqrt();
    if norm < T::from_f64_lossy(1e-3) {
        return Err(DenseError::Unsupported(format!(
            "tableau {t} has no common eigenvector"
        )));
    }
    let tiny = T::epsilon() * T::from_f64_lossy(64.0);
    let lead = *col
        .iter()
        .find(|e| e.norm() > tiny)
        .expect("nonzero column");
    let fix = lead.conj() / (Complex::new(lead.norm(), T::zero()) * norm);
    let psi0: Vec<Complex<T>> = col.iter().map(|e| e * fix).collect();

    let mut w = DenseOperator::zeros(k)?;
    for x in 0..dim {
        let mut v = psi0.clone();
        for (i, op) in xs.iter().enumerate() {
            if (x >> (k - 1 - i)) & 1 == 1 {
                v = (0..dim)
                    .map(|r| {
                        (0..dim)
                            .map(|c| op.get(r, c) * v[c])
                            .fold(Complex::zero(), |a, b| a + b)
                    })
                    .collect();
            }
        }
        for (r, e) in v.into_iter().enumerate() {
            w.set(r, x, e);
        }
    }
    Ok(w)
}

/// Max deviation between `W P W^dagger` and the tableau image of `P` over
/// all `4^k - 1` nontrivial Paulis `P`.
pub fn synthesis_residual<T: Scalar>(t: &CliffordTableau) -> Result<T, DenseError> {
    use crate::pauli::Letter;
    let k = t.k();
    let w = synthesize_unitary::<T>(t)?;
    let mut worst = T::zero();
    for code in 1..(1usize << (2 * k)) {
        let letters: Vec<Letter> = (0..k)
            .map(|i| Letter::from_code(((code >> (2 * i)) & 3) as u8))
            .collect();
        let p = PauliString::from_letters(1, letters, crate::pauli::Phase::ONE);
        let image = t.conjugate(&p).expect("window 1..=k");
        let lhs = w.conjugate(&DenseOperator::pauli(&on_dense_sites(&p), k)?);
        let rhs = DenseOperator::pauli(&on_dense_sites(&image), k)?;
        worst = worst.max(lhs.max_abs_diff(&rhs));
    }
    Ok(worst)
}
