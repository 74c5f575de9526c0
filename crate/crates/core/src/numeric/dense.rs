//! Dense operators on `L <= 12` qubits. Site 0 is the most significant bit.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::pauli::{Letter, PauliString};

use super::Scalar;

/// Largest supported chain length (`4^12` entries).
pub const MAX_SITES: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DenseError {
    #[error("chain length {0} exceeds the dense limit of {MAX_SITES}")]
    TooLarge(usize),
    #[error("operator {op} does not fit on sites 0..{len}")]
    OutOfRange { op: String, len: usize },
    #[error("unsupported transform for dense evaluation: {0}")]
    Unsupported(String),
}

/// Row-major `2^L x 2^L` complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseOperator<T> {
    sites: usize,
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> DenseOperator<T> {
    pub fn zeros(sites: usize) -> Result<Self, DenseError> {
        if sites > MAX_SITES {
            return Err(DenseError::TooLarge(sites));
        }
        let dim = 1usize << sites;
        Ok(DenseOperator {
            sites,
            dim,
            data: vec![Complex::zero(); dim * dim],
        })
    }

    pub fn identity(sites: usize) -> Result<Self, DenseError> {
        let mut m = Self::zeros(sites)?;
        for i in 0..m.dim {
            m.data[i * m.dim + i] = Complex::one();
        }
        Ok(m)
    }

    pub fn from_rows(sites: usize, rows: &[Vec<Complex<T>>]) -> Result<Self, DenseError> {
        let mut m = Self::zeros(sites)?;
        assert_eq!(rows.len(), m.dim, "row count");
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), m.dim, "row length");
            m.data[r * m.dim..(r + 1) * m.dim].copy_from_slice(row);
        }
        Ok(m)
    }

    /// The Pauli string on sites `0..sites`.
    pub fn pauli(p: &PauliString, sites: usize) -> Result<Self, DenseError> {
        let mut m = Self::zeros(sites)?;
        if let Some((lo, hi)) = p.window() {
            if lo < 0 || hi >= sites as i64 {
                return Err(DenseError::OutOfRange {
                    op: p.to_string(),
                    len: sites,
                });
            }
        }
        let (mut xmask, mut zmask, mut ny) = (0usize, 0usize, 0u8);
        for (site, l) in p.support() {
            let bit = 1usize << (sites - 1 - site as usize);
            if l.x() {
                xmask |= bit;
            }
            if l.z() {
                zmask |= bit;
            }
            if l == Letter::Y {
                ny += 1;
            }
        }
        // Y = i X Z, so a string with ny Y's is i^ny X^x Z^z
        let base = phase_value::<T>(p.phase().exponent() + ny);
        for col in 0..m.dim {
            let row = col ^ xmask;
            let sign = if (col & zmask).count_ones() % 2 == 1 {
                -base
            } else {
                base
            };
            m.data[row * m.dim + col] = sign;
        }
        Ok(m)
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> Complex<T> {
        self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Complex<T>) {
        self.data[r * self.dim + c] = v;
    }

    pub fn data(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        let mut out = self.clone();
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.data[c * self.dim + r] = self.data[r * self.dim + c].conj();
            }
        }
        out
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = vec![Complex::zero(); n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.data[r * n + k];
                if a.is_zero() {
                    continue;
                }
                let row = &other.data[k * n..(k + 1) * n];
                for (o, b) in out[r * n..(r + 1) * n].iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        DenseOperator {
            sites: self.sites,
            dim: n,
            data: out,
        }
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        DenseOperator {
            sites: self.sites,
            dim: self.dim,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    /// Entrywise max-norm.
    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, v| m.max(v.norm()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .fold(T::zero(), |m, (a, b)| m.max((a - b).norm()))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &self.matmul(other) - &other.matmul(self)
    }

    /// `max |U U^dagger - I|`.
    pub fn unitarity_defect(&self) -> T {
        let id = Self::identity(self.sites).expect("same size");
        self.matmul(&self.adjoint()).max_abs_diff(&id)
    }

    /// `U O U^dagger`.
    pub fn conjugate(&self, o: &Self) -> Self {
        self.matmul(o).matmul(&self.adjoint())
    }

    fn sub_index(&self, r: usize, sites: &[usize]) -> usize {
        sites
            .iter()
            .fold(0, |acc, &s| (acc << 1) | ((r >> (self.sites - 1 - s)) & 1))
    }

    fn with_sub(&self, r: usize, sites: &[usize], sub: usize) -> usize {
        let k = sites.len();
        let mut out = r;
        for (j, &s) in sites.iter().enumerate() {
            let bit = 1usize << (self.sites - 1 - s);
            if (sub >> (k - 1 - j)) & 1 == 1 {
                out |= bit;
            } else {
                out &= !bit;
            }
        }
        out
    }

    /// `G O` with the `k`-site gate `G` acting on `sites` (in gate order).
    pub fn apply_left(&self, g: &Self, sites: &[usize]) -> Self {
        assert_eq!(g.sites, sites.len(), "gate size");
        let n = self.dim;
        let mut out = vec![Complex::zero(); n * n];
        for r in 0..n {
            let s = self.sub_index(r, sites);
            for sp in 0..g.dim {
                let gv = g.get(s, sp);
                if gv.is_zero() {
                    continue;
                }
                let src = self.with_sub(r, sites, sp);
                let row = &self.data[src * n..(src + 1) * n];
                for (o, v) in out[r * n..(r + 1) * n].iter_mut().zip(row) {
                    *o += gv * v;
                }
            }
        }
        DenseOperator {
            sites: self.sites,
            dim: n,
            data: out,
        }
    }

    /// `O G` with `G` acting on `sites`.
    pub fn apply_right(&self, g: &Self, sites: &[usize]) -> Self {
        assert_eq!(g.sites, sites.len(), "gate size");
        let n = self.dim;
        let mut out = vec![Complex::zero(); n * n];
        for c in 0..n {
            let s = self.sub_index(c, sites);
            for sp in 0..g.dim {
                let gv = g.get(sp, s);
                if gv.is_zero() {
                    continue;
                }
                let src = self.with_sub(c, sites, sp);
                for r in 0..n {
                    out[r * n + c] += self.data[r * n + src] * gv;
                }
            }
        }
        DenseOperator {
            sites: self.sites,
            dim: n,
            data: out,
        }
    }

    /// `G O G^dagger` with `G` on `sites`.
    pub fn conjugate_by_gate(&self, g: &Self, sites: &[usize]) -> Self {
        self.apply_left(g, sites).apply_right(&g.adjoint(), sites)
    }

    /// Hermitian matrix as a nalgebra matrix, for eigenvalue routines.
    pub fn to_nalgebra(&self) -> nalgebra::DMatrix<Complex<T>>
    where
        T: nalgebra::RealField,
    {
        nalgebra::DMatrix::from_row_slice(self.dim, self.dim, &self.data)
    }
}

impl<T: Scalar> Add for &DenseOperator<T> {
    type Output = DenseOperator<T>;

    fn add(self, rhs: &DenseOperator<T>) -> DenseOperator<T> {
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a + b)
            .collect();
        DenseOperator {
            sites: self.sites,
            dim: self.dim,
            data,
        }
    }
}

impl<T: Scalar> Sub for &DenseOperator<T> {
    type Output = DenseOperator<T>;

    fn sub(self, rhs: &DenseOperator<T>) -> DenseOperator<T> {
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a - b)
            .collect();
        DenseOperator {
            sites: self.sites,
            dim: self.dim,
            data,
        }
    }
}

impl<T: Scalar> Mul for &DenseOperator<T> {
    type Output = DenseOperator<T>;

    fn mul(self, rhs: &DenseOperator<T>) -> DenseOperator<T> {
        self.matmul(rhs)
    }
}

/// `i^s` as a complex number.
pub fn phase_value<T: Scalar>(s: u8) -> Complex<T> {
    match s % 4 {
        0 => Complex::new(T::one(), T::zero()),
        1 => Complex::new(T::zero(), T::one()),
        2 => Complex::new(-T::one(), T::zero()),
        _ => Complex::new(T::zero(), -T::one()),
    }
}
