//! Staircase transforms `U_chain = prod_n U_{n..n+k-1}` and their bulk action.
//!
//! Conjugation applies the factor on the left-most sites first. Images of local
//! operators are computed by sweeping the factors rightwards over the growing
//! support; once the seed is digested, the letters on the last `k - 1` sites
//! (the frontier) evolve under a finite deterministic map, so the sweep either
//! empties the frontier (a local image) or revisits a frontier state (a
//! periodic string).

mod classify;
mod image;
pub mod library;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::clifford::CliffordTableau;
use crate::pauli::{Letter, PauliString, Phase};

pub use classify::{classify, letter_images, ClassTag, TiClass};
pub use image::{ChainImage, NonLocalImage, SignRule, TailKind, SIGN_FRAME_END};

/// Sweep steps allowed before cycle detection is declared broken.
pub const DEFAULT_HORIZON: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("no frontier cycle within {horizon} steps for seed {seed}")]
    HorizonExhausted { seed: String, horizon: usize },
    #[error(
        "intermediate image of {seed} is non-local; composing through a string is not supported"
    )]
    NonLocalIntermediate { seed: String },
    #[error("transform has non-local images; no local inverse")]
    NotInvertible,
    #[error("no local inverse found within radius {0}")]
    InverseRadius(i64),
}

/// `U_chain` built from one basic Clifford `U` on `k` sites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    gate: CliffordTableau,
}

impl Staircase {
    pub fn new(gate: CliffordTableau) -> Self {
        Staircase { gate }
    }

    pub fn gate(&self) -> &CliffordTableau {
        &self.gate
    }

    pub fn k(&self) -> usize {
        self.gate.k()
    }

    /// Exact conjugation on the open chain `first..=last`: factors at
    /// `m = first, first+1, ..., last-k+1`, applied in that order.
    pub fn conjugate_open(&self, p: &PauliString, first: i64, last: i64) -> PauliString {
        let k = self.k() as i64;
        let mut op = p.clone();
        for m in first..=(last - k + 1) {
            op = self.gate.conjugate_at(&op, m);
        }
        op
    }

    /// Bulk image of `seed` (window relative to the source site).
    pub fn sweep(&self, seed: &PauliString, horizon: usize) -> Result<ChainImage, ChainError> {
        let (lo, hi) = match seed.window() {
            None => return Ok(ChainImage::Local(seed.clone())),
            Some(w) => w,
        };
        let k = self.k() as i64;
        let m0 = hi - k + 1;
        let mut op = seed.clone();
        for m in (lo - k + 1)..=m0 {
            op = self.gate.conjugate_at(&op, m);
        }
        let frontier = |op: &PauliString, m: i64| -> Vec<Letter> {
            (m + 1..m + k).map(|n| op.letter_at(n)).collect()
        };
        let mut ops = vec![op.clone()];
        let mut seen: HashMap<Vec<Letter>, usize> = HashMap::new();
        let mut t = 0usize;
        loop {
            let f = frontier(&op, m0 + t as i64);
            if f.iter().all(|l| l.is_identity()) {
                return Ok(ChainImage::Local(op));
            }
            if let Some(&c) = seen.get(&f) {
                let mut image = NonLocalImage {
                    k: self.k(),
                    m0,
                    ops,
                    cycle_start: c,
                    period: t - c,
                    sign: SignRule::constant(1),
                };
                image.sign = sampled_sign(&image);
                return Ok(ChainImage::NonLocal(image));
            }
            if t >= horizon {
                return Err(ChainError::HorizonExhausted {
                    seed: seed.to_string(),
                    horizon,
                });
            }
            seen.insert(f, t);
            t += 1;
            op = self.gate.conjugate_at(&op, m0 + t as i64);
            ops.push(op.clone());
        }
    }

    pub fn image_of_site_pauli(
        &self,
        letter: Letter,
        horizon: usize,
    ) -> Result<ChainImage, ChainError> {
        self.sweep(&PauliString::single(0, letter), horizon)
    }
}

// Samples the sign for source sites n = 0..12 with the chain ending on a site
// congruent to SIGN_FRAME_END mod 12, far enough right to be past the transient.
fn sampled_sign(img: &NonLocalImage) -> SignRule {
    let reach = img.m0 + (img.ops.len() as i64) + img.k as i64 + 12;
    let end = SIGN_FRAME_END + 12 * (reach / 12 + 2);
    let samples: Vec<i8> = (0..12)
        .map(|n| {
            let p = img
                .resolve(end - n)
                .expect("frame end lies beyond the seed");
            p.phase()
                .sign()
                .expect("images of Hermitian operators are Hermitian")
        })
        .collect();
    SignRule::from_samples(&samples)
}

/// Translation-invariant map given by the images of `X_0` and `Z_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalMap {
    img_x: PauliString,
    img_z: PauliString,
}

impl LocalMap {
    pub fn new(img_x: PauliString, img_z: PauliString) -> Self {
        LocalMap { img_x, img_z }
    }

    /// On-site basis change from a one-site tableau (site 1 mapped to site 0).
    pub fn on_site(w: &CliffordTableau) -> Self {
        assert_eq!(w.k(), 1, "on-site basis change needs a one-site tableau");
        LocalMap {
            img_x: w.img_x(1).translate(-1),
            img_z: w.img_z(1).translate(-1),
        }
    }

    pub fn img_x(&self) -> &PauliString {
        &self.img_x
    }

    pub fn img_z(&self) -> &PauliString {
        &self.img_z
    }

    pub fn letter_image(&self, site: i64, l: Letter) -> PauliString {
        match l {
            Letter::I => PauliString::identity(),
            Letter::X => self.img_x.translate(site),
            Letter::Z => self.img_z.translate(site),
            Letter::Y => (&self.img_x * &self.img_z)
                .times_phase(Phase::I)
                .translate(site),
        }
    }

    pub fn apply(&self, p: &PauliString) -> PauliString {
        p.support()
            .fold(PauliString::scalar(p.phase()), |acc, (n, l)| {
                &acc * &self.letter_image(n, l)
            })
    }
}

/// A chain transform: a staircase, a translation-invariant local map, or a
/// composition. `Compose(v)` applies `v.last()` first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transform {
    Staircase(Staircase),
    Local(LocalMap),
    Compose(Vec<Transform>),
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Transform::Staircase(s) => write!(f, "staircase{}", s.gate()),
            Transform::Local(m) => write!(f, "local[X->{} Z->{}]", m.img_x, m.img_z),
            Transform::Compose(v) => {
                let parts: Vec<String> = v.iter().map(|t| t.to_string()).collect();
                write!(f, "{}", parts.join(" * "))
            }
        }
    }
}

impl Transform {
    pub fn staircase(gate: CliffordTableau) -> Transform {
        Transform::Staircase(Staircase::new(gate))
    }

    pub fn on_site(w: &CliffordTableau) -> Transform {
        Transform::Local(LocalMap::on_site(w))
    }

    pub fn identity() -> Transform {
        Transform::Compose(Vec::new())
    }

    /// `outer` after `inner`.
    pub fn then(inner: Transform, outer: Transform) -> Transform {
        Transform::Compose(vec![outer, inner])
    }

    pub fn image_of_string(&self, p: &PauliString) -> Result<ChainImage, ChainError> {
        self.image_with_horizon(p, DEFAULT_HORIZON)
    }

    pub fn image_with_horizon(
        &self,
        p: &PauliString,
        horizon: usize,
    ) -> Result<ChainImage, ChainError> {
        match self {
            Transform::Staircase(s) => s.sweep(p, horizon),
            Transform::Local(m) => Ok(ChainImage::Local(m.apply(p))),
            Transform::Compose(v) => {
                let mut cur = ChainImage::Local(p.clone());
                for t in v.iter().rev() {
                    let op = match &cur {
                        ChainImage::Local(op) => op.clone(),
                        ChainImage::NonLocal(_) => {
                            return Err(ChainError::NonLocalIntermediate {
                                seed: p.to_string(),
                            })
                        }
                    };
                    cur = t.image_with_horizon(&op, horizon)?;
                }
                Ok(cur)
            }
        }
    }

    pub fn image_of_site_pauli(&self, letter: Letter) -> Result<ChainImage, ChainError> {
        self.image_of_string(&PauliString::single(0, letter))
    }

    /// Exact action on the open chain `first..=last`. Local maps act on every
    /// site of the chain; images outside the chain are not truncated.
    pub fn conjugate_open(&self, p: &PauliString, first: i64, last: i64) -> PauliString {
        match self {
            Transform::Staircase(s) => s.conjugate_open(p, first, last),
            Transform::Local(m) => m.apply(p),
            Transform::Compose(v) => v
                .iter()
                .rev()
                .fold(p.clone(), |acc, t| t.conjugate_open(&acc, first, last)),
        }
    }

    /// Local inverse, found by solving for the preimages of `X_0` and `Z_0`
    /// over GF(2) on growing windows `[-r, r]`.
    pub fn inverse(&self, max_radius: i64) -> Result<LocalMap, ChainError> {
        for r in 0..=max_radius {
            let ix = self.preimage(Letter::X, r)?;
            let iz = self.preimage(Letter::Z, r)?;
            if let (Some(ix), Some(iz)) = (ix, iz) {
                return Ok(LocalMap::new(ix, iz));
            }
        }
        Err(ChainError::InverseRadius(max_radius))
    }

    fn preimage(&self, target: Letter, r: i64) -> Result<Option<PauliString>, ChainError> {
        // generator images as bit rows over a site window
        let mut gens = Vec::new();
        for n in -r..=r {
            for l in [Letter::X, Letter::Z] {
                let g = PauliString::single(n, l);
                let img = match self.image_of_string(&g)? {
                    ChainImage::Local(p) => p,
                    ChainImage::NonLocal(_) => return Err(ChainError::NotInvertible),
                };
                gens.push((g, img));
            }
        }
        let lo = gens
            .iter()
            .filter_map(|(_, i)| i.window())
            .map(|w| w.0)
            .min()
            .unwrap_or(0)
            .min(0);
        let hi = gens
            .iter()
            .filter_map(|(_, i)| i.window())
            .map(|w| w.1)
            .max()
            .unwrap_or(0)
            .max(0);
        let width = (hi - lo + 1) as usize;
        let bits = |p: &PauliString| -> Vec<bool> {
            let mut v = vec![false; 2 * width];
            for (n, l) in p.support() {
                let i = (n - lo) as usize;
                v[2 * i] = l.x();
                v[2 * i + 1] = l.z();
            }
            v
        };
        let rows: Vec<Vec<bool>> = gens.iter().map(|(_, img)| bits(img)).collect();
        let goal = bits(&PauliString::single(0, target));
        let combo = match solve_gf2(&rows, &goal) {
            Some(c) => c,
            None => return Ok(None),
        };
        let q = gens
            .iter()
            .zip(&combo)
            .filter(|(_, &on)| on)
            .fold(PauliString::identity(), |acc, ((g, _), _)| &acc * g);
        let q = q.unsigned();
        let fwd = self
            .image_of_string(&q)?
            .local()
            .cloned()
            .ok_or(ChainError::NotInvertible)?;
        Ok(Some(q.times_phase(fwd.phase().conj())))
    }
}

// Finds a subset of rows whose XOR is `goal`.
fn solve_gf2(rows: &[Vec<bool>], goal: &[bool]) -> Option<Vec<bool>> {
    let n = rows.len();
    let w = goal.len();
    // each working row: (bits, combination)
    let mut work: Vec<(Vec<bool>, Vec<bool>)> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut c = vec![false; n];
            c[i] = true;
            (r.clone(), c)
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next = 0;
    for col in 0..w {
        if let Some(pr) = (next..n).find(|&r| work[r].0[col]) {
            work.swap(next, pr);
            for r in 0..n {
                if r != next && work[r].0[col] {
                    let (src_bits, src_c) = work[next].clone();
                    for (a, b) in work[r].0.iter_mut().zip(&src_bits) {
                        *a ^= b;
                    }
                    for (a, b) in work[r].1.iter_mut().zip(&src_c) {
                        *a ^= b;
                    }
                }
            }
            pivots.push((col, next));
            next += 1;
        }
    }
    let mut acc = vec![false; w];
    let mut combo = vec![false; n];
    for &(col, r) in &pivots {
        if acc[col] != goal[col] {
            for (a, b) in acc.iter_mut().zip(&work[r].0) {
                *a ^= b;
            }
            for (a, b) in combo.iter_mut().zip(&work[r].1) {
                *a ^= b;
            }
        }
    }
    (acc == goal).then_some(combo)
}
