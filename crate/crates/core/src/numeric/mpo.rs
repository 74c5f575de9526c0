//! Explicit staircase products and their matrix-product-operator form.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::chain::Transform;
use crate::classifier::LayeredCircuit;
use crate::clifford::CliffordTableau;

use super::{synthesize_unitary, DenseError, DenseOperator, Scalar, MAX_SITES};

/// `U_{L-k} ... U_1 U_0` on the open chain `0..L`, `U_m` acting on sites
/// `m..m+k-1`; the left-most gate acts first.
pub fn dense_staircase<T: Scalar>(
    t: &CliffordTableau,
    sites: usize,
) -> Result<DenseOperator<T>, DenseError> {
    let g = synthesize_unitary::<T>(t)?;
    let k = t.k();
    let mut u = DenseOperator::identity(sites)?;
    if sites < k {
        return Ok(u);
    }
    for m in 0..=sites - k {
        let span: Vec<usize> = (m..m + k).collect();
        u = u.apply_left(&g, &span);
    }
    Ok(u)
}

fn on_site_gate(t: &Transform) -> Option<CliffordTableau> {
    let Transform::Local(m) = t else { return None };
    let single = |p: &crate::pauli::PauliString| p.window() == Some((0, 0));
    if !(single(m.img_x()) && single(m.img_z())) {
        return None;
    }
    CliffordTableau::new(
        1,
        vec![m.img_x().translate(1)],
        vec![m.img_z().translate(1)],
    )
    .ok()
}

/// Dense unitary of a transform on the open chain. Staircases include their
/// literal boundary gates; only on-site local maps are supported.
pub fn dense_transform<T: Scalar>(
    t: &Transform,
    sites: usize,
) -> Result<DenseOperator<T>, DenseError> {
    match t {
        Transform::Staircase(s) => dense_staircase(s.gate(), sites),
        Transform::Local(_) => {
            let w = on_site_gate(t).ok_or_else(|| DenseError::Unsupported(t.to_string()))?;
            dense_staircase(&w, sites)
        }
        Transform::Compose(v) => {
            let mut u = DenseOperator::identity(sites)?;
            for part in v.iter().rev() {
                u = dense_transform(part, sites)?.matmul(&u);
            }
            Ok(u)
        }
    }
}

/// Open-chain product of a layered circuit, keeping gates that fit.
pub fn dense_layered<T: Scalar>(
    c: &LayeredCircuit,
    sites: usize,
) -> Result<DenseOperator<T>, DenseError> {
    let mut u = DenseOperator::identity(sites)?;
    for layer in &c.layers {
        let k = layer.gate.k();
        let g = synthesize_unitary::<T>(&layer.gate)?;
        let mut m = layer.offset.rem_euclid(layer.stride) as usize;
        while m + k <= sites {
            let span: Vec<usize> = (m..m + k).collect();
            u = u.apply_left(&g, &span);
            m += layer.stride as usize;
        }
    }
    Ok(u)
}

/// Layered circuit on a ring of `sites` sites; gates wrap around. Each
/// stride must divide `sites`.
pub fn dense_layered_periodic<T: Scalar>(
    c: &LayeredCircuit,
    sites: usize,
) -> Result<DenseOperator<T>, DenseError> {
    let mut u = DenseOperator::identity(sites)?;
    for layer in &c.layers {
        let stride = layer.stride as usize;
        if !sites.is_multiple_of(stride) {
            return Err(DenseError::Unsupported(format!(
                "stride {stride} on a ring of {sites}"
            )));
        }
        let k = layer.gate.k();
        let g = synthesize_unitary::<T>(&layer.gate)?;
        for m in (layer.offset.rem_euclid(layer.stride) as usize..sites).step_by(stride) {
            let span: Vec<usize> = (m..m + k).map(|s| s % sites).collect();
            u = u.apply_left(&g, &span);
        }
    }
    Ok(u)
}

/// Tensor `M[i, j; l, r]` with physical output `i`, input `j` (dimension 2)
/// and virtual indices `l < chi_l`, `r < chi_r`.
#[derive(Clone, Debug, PartialEq)]
pub struct MpoTensor<T> {
    pub chi_l: usize,
    pub chi_r: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> MpoTensor<T> {
    pub fn zeros(chi_l: usize, chi_r: usize) -> Self {
        MpoTensor {
            chi_l,
            chi_r,
            data: vec![Complex::zero(); 4 * chi_l * chi_r],
        }
    }

    fn idx(&self, i: usize, j: usize, l: usize, r: usize) -> usize {
        ((i * 2 + j) * self.chi_l + l) * self.chi_r + r
    }

    pub fn get(&self, i: usize, j: usize, l: usize, r: usize) -> Complex<T> {
        self.data[self.idx(i, j, l, r)]
    }

    pub fn set(&mut self, i: usize, j: usize, l: usize, r: usize, v: Complex<T>) {
        let k = self.idx(i, j, l, r);
        self.data[k] = v;
    }

    /// Bulk tensor of a two-site staircase, `chi = 4`. The left bond carries
    /// `(a, x)`: the input index handed to this site's gate and the output
    /// index the previous gate produced here. The right bond carries `(b, y)`.
    pub fn from_gate(u: &DenseOperator<T>) -> Self {
        assert_eq!(u.sites(), 2, "two-site gate");
        let mut m = Self::zeros(4, 4);
        for i in 0..2 {
            for j in 0..2 {
                for a in 0..2 {
                    for b in 0..2 {
                        for y in 0..2 {
                            // x must equal j
                            m.set(i, j, a * 2 + j, b * 2 + y, u.get(i * 2 + b, a * 2 + y));
                        }
                    }
                }
            }
        }
        m
    }

    /// Final site of the open staircase: `delta(i, a) delta(x, j)`.
    pub fn cap() -> Self {
        let mut m = Self::zeros(4, 1);
        for i in 0..2 {
            for j in 0..2 {
                m.set(i, j, i * 2 + j, 0, Complex::one());
            }
        }
        m
    }
}

/// Open-boundary tensors of the `k = 2` staircase on `sites >= 2` sites:
/// left boundary vector, site tensors and right boundary vector.
#[allow(clippy::type_complexity)]
pub fn staircase_tensors<T: Scalar>(
    t: &CliffordTableau,
    sites: usize,
) -> Result<(Vec<Complex<T>>, Vec<MpoTensor<T>>, Vec<Complex<T>>), DenseError> {
    if t.k() != 2 {
        return Err(DenseError::Unsupported(format!(
            "MPO form needs k = 2, got {}",
            t.k()
        )));
    }
    if sites < 2 {
        return Err(DenseError::Unsupported(
            "MPO form needs at least two sites".into(),
        ));
    }
    let bulk = MpoTensor::from_gate(&synthesize_unitary::<T>(t)?);
    let mut tensors = vec![bulk; sites - 1];
    tensors.push(MpoTensor::cap());
    let left = (0..4)
        .map(|ax| {
            if ax / 2 == ax % 2 {
                Complex::one()
            } else {
                Complex::zero()
            }
        })
        .collect();
    Ok((left, tensors, vec![Complex::one()]))
}

/// Left and right virtual boundary vectors.
pub type Boundary<'a, T> = (&'a [Complex<T>], &'a [Complex<T>]);

/// Contracts site tensors left to right. With boundary vectors the chain is
/// open; without, the virtual index is traced (periodic).
pub fn contract_mpo<T: Scalar>(
    tensors: &[MpoTensor<T>],
    boundary: Option<Boundary<'_, T>>,
) -> Result<DenseOperator<T>, DenseError> {
    let sites = tensors.len();
    if sites > MAX_SITES {
        return Err(DenseError::TooLarge(sites));
    }
    let chi0 = tensors.first().map_or(1, |m| m.chi_l);
    // state[((I * d + J) * ns + s) * chi + b]
    let ns = if boundary.is_some() { 1 } else { chi0 };
    let mut chi = chi0;
    let mut state: Vec<Complex<T>> = vec![Complex::zero(); ns * chi];
    for s in 0..ns {
        for b in 0..chi {
            state[s * chi + b] = match boundary {
                Some((left, _)) => left[b],
                None if s == b => Complex::one(),
                None => Complex::zero(),
            };
        }
    }
    let mut d = 1usize;
    for m in tensors {
        assert_eq!(m.chi_l, chi, "bond mismatch");
        let nd = d * 2;
        let nchi = m.chi_r;
        let mut next = vec![Complex::zero(); nd * nd * ns * nchi];
        for big_i in 0..d {
            for big_j in 0..d {
                for s in 0..ns {
                    let base = ((big_i * d + big_j) * ns + s) * chi;
                    for l in 0..chi {
                        let v = state[base + l];
                        if v.is_zero() {
                            continue;
                        }
                        for i in 0..2 {
                            for j in 0..2 {
                                let nb = (((big_i * 2 + i) * nd + big_j * 2 + j) * ns + s) * nchi;
                                for r in 0..nchi {
                                    next[nb + r] += v * m.get(i, j, l, r);
                                }
                            }
                        }
                    }
                }
            }
        }
        state = next;
        chi = nchi;
        d = nd;
    }
    let mut out = DenseOperator::zeros(sites)?;
    for big_i in 0..d {
        for big_j in 0..d {
            let base = (big_i * d + big_j) * ns;
            let v = match boundary {
                Some((_, right)) => (0..chi).fold(Complex::zero(), |acc, b| {
                    acc + state[base * chi + b] * right[b]
                }),
                None => {
                    assert_eq!(chi, chi0, "periodic trace needs matching bonds");
                    (0..ns).fold(Complex::zero(), |acc, s| acc + state[(base + s) * chi + s])
                }
            };
            out.set(big_i, big_j, v);
        }
    }
    Ok(out)
}

/// The `k = 2` staircase as a contracted `chi = 4` MPO with open boundaries.
pub fn mpo_contract<T: Scalar>(
    t: &CliffordTableau,
    sites: usize,
) -> Result<DenseOperator<T>, DenseError> {
    if t.is_identity() && sites < 2 {
        return DenseOperator::identity(sites);
    }
    let (left, tensors, right) = staircase_tensors::<T>(t, sites)?;
    contract_mpo(&tensors, Some((&left, &right)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::library::{cluster, kramers_wannier, u_star};
    use crate::classifier::circuit_depth_witness;

    #[test]
    fn staircase_at_l_equals_k_is_the_gate() {
        let t = cluster();
        let a = dense_staircase::<f64>(&t, 2).unwrap();
        let b = synthesize_unitary::<f64>(&t).unwrap();
        assert!(a.max_abs_diff(&b) < 1e-15);
    }

    #[test]
    fn mpo_matches_product() {
        for t in [cluster(), kramers_wannier(), CliffordTableau::identity(2)] {
            for l in [2, 3, 5] {
                let a = dense_staircase::<f64>(&t, l).unwrap();
                let b = mpo_contract::<f64>(&t, l).unwrap();
                assert!(a.max_abs_diff(&b) < 1e-13, "{t} L={l}");
            }
        }
    }

    #[test]
    fn commuting_layers_match_staircase() {
        let c = circuit_depth_witness(&u_star()).unwrap();
        let a = dense_layered::<f64>(&c, 5).unwrap();
        let b = dense_staircase::<f64>(&u_star(), 5).unwrap();
        assert!(a.max_abs_diff(&b) < 1e-13);
    }
}
