//! Finite-depth circuit witnesses for local staircases.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::chain::library::{decoration_v1, decoration_v2, u_star};
use crate::chain::{ChainImage, ClassTag, LocalMap, Transform};
use crate::clifford::CliffordTableau;
use crate::pauli::{Letter, PauliString};

use super::five_site::{family_instances, match_family, ImagePair};
use super::realize::{one_site_cliffords, realize_staircase};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("transform has non-local images")]
    NonLocal,
    #[error("no circuit witness for class {0}")]
    Unsupported(String),
}

/// Copies of `gate` on sites `m..m+k-1` for every `m = offset (mod stride)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CircuitLayer {
    pub gate: CliffordTableau,
    pub stride: i64,
    pub offset: i64,
}

impl CircuitLayer {
    pub fn on_site(w: &CliffordTableau) -> Self {
        CircuitLayer {
            gate: w.clone(),
            stride: 1,
            offset: 0,
        }
    }

    fn positions(&self, from: i64, to: i64) -> impl Iterator<Item = i64> + '_ {
        let start = from + (self.offset - from).rem_euclid(self.stride);
        (start..=to).step_by(self.stride as usize)
    }

    /// Bulk conjugation.
    pub fn conjugate(&self, p: &PauliString) -> PauliString {
        let Some((lo, hi)) = p.window() else {
            return p.clone();
        };
        let k = self.gate.k() as i64;
        let mut op = p.clone();
        for m in self.positions(lo - k + 1, hi) {
            op = self.gate.conjugate_at(&op, m);
        }
        op
    }

    /// Conjugation on the open chain `first..=last`, keeping only gates that fit.
    pub fn conjugate_open(&self, p: &PauliString, first: i64, last: i64) -> PauliString {
        let k = self.gate.k() as i64;
        let mut op = p.clone();
        for m in self.positions(first, last - k + 1) {
            op = self.gate.conjugate_at(&op, m);
        }
        op
    }
}

/// Layers applied in order, first layer first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LayeredCircuit {
    pub layers: Vec<CircuitLayer>,
}

impl LayeredCircuit {
    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    pub fn conjugate(&self, p: &PauliString) -> PauliString {
        self.layers
            .iter()
            .fold(p.clone(), |acc, l| l.conjugate(&acc))
    }

    pub fn conjugate_open(&self, p: &PauliString, first: i64, last: i64) -> PauliString {
        self.layers
            .iter()
            .fold(p.clone(), |acc, l| l.conjugate_open(&acc, first, last))
    }

    pub fn images(&self) -> ImagePair {
        ImagePair::new(
            self.conjugate(&PauliString::single(0, Letter::X)),
            self.conjugate(&PauliString::single(0, Letter::Z)),
        )
    }

    fn then(mut self, other: LayeredCircuit) -> LayeredCircuit {
        self.layers.extend(other.layers);
        self
    }
}

impl fmt::Display for LayeredCircuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.layers.iter().enumerate() {
            writeln!(
                f,
                "layer {i}: k={} stride={} offset={} gate={}",
                l.gate.k(),
                l.stride,
                l.offset,
                l.gate
            )?;
        }
        Ok(())
    }
}

/// True when the gate commutes with its own translates by `1..k`, so the
/// staircase equals `k` layers of non-overlapping copies.
pub fn commutes_with_translates(gate: &CliffordTableau) -> bool {
    let k = gate.k() as i64;
    (1..k).all(|s| {
        (1..=k + s).all(|site| {
            [Letter::X, Letter::Z].iter().all(|&l| {
                let p = PauliString::single(site, l);
                let ab = gate.conjugate_at(&gate.conjugate_at(&p, 1), 1 + s);
                let ba = gate.conjugate_at(&gate.conjugate_at(&p, 1 + s), 1);
                ab == ba
            })
        })
    })
}

fn tiled(gate: &CliffordTableau) -> LayeredCircuit {
    let k = gate.k() as i64;
    LayeredCircuit {
        layers: (0..k)
            .map(|r| CircuitLayer {
                gate: gate.clone(),
                stride: k,
                offset: r,
            })
            .collect(),
    }
}

fn with_bases(
    pre: &CliffordTableau,
    body: LayeredCircuit,
    post: &CliffordTableau,
) -> LayeredCircuit {
    let mut layers = Vec::new();
    if !pre.is_identity() {
        layers.push(CircuitLayer::on_site(pre));
    }
    layers.extend(body.layers);
    if !post.is_identity() {
        layers.push(CircuitLayer::on_site(post));
    }
    LayeredCircuit { layers }
}

/// Depth-4 witness for a decoration pair: basis change, the commuting
/// `U*` on even then odd bonds, basis change.
fn decoration_witness(pair: &ImagePair) -> Option<LayeredCircuit> {
    let star = tiled(&u_star());
    let bases = one_site_cliffords();
    for b in &bases {
        let pre = CircuitLayer::on_site(b);
        let mid = LayeredCircuit {
            layers: vec![pre.clone()],
        }
        .then(star.clone());
        let img = mid.images();
        for w in &bases {
            let post = CircuitLayer::on_site(w);
            if post.conjugate(&img.img_x) == pair.img_x && post.conjugate(&img.img_z) == pair.img_z
            {
                return Some(LayeredCircuit {
                    layers: vec![pre, star.layers[0].clone(), star.layers[1].clone(), post],
                });
            }
        }
    }
    None
}

fn compose_pairs(inner: &ImagePair, outer: &ImagePair) -> ImagePair {
    let m = LocalMap::new(outer.img_x.clone(), outer.img_z.clone());
    ImagePair::new(m.apply(&inner.img_x), m.apply(&inner.img_z))
}

/// Two decorations `V1` then `V2` whose composite is `pair`; the library
/// factors are tried first.
pub fn decoration_factors(pair: &ImagePair) -> Option<(ImagePair, ImagePair)> {
    let v1 = decoration_v1();
    let v2 = decoration_v2();
    let lib = (
        ImagePair::new(v1.img_x().clone(), v1.img_z().clone()),
        ImagePair::new(v2.img_x().clone(), v2.img_z().clone()),
    );
    if compose_pairs(&lib.0, &lib.1) == *pair {
        return Some(lib);
    }
    let decorations: Vec<ImagePair> = family_instances()
        .into_iter()
        .filter(|(t, s, _)| *t == ClassTag::L3 && *s == 0)
        .map(|(_, _, p)| p)
        .collect();
    for a in &decorations {
        for b in &decorations {
            if compose_pairs(a, b) == *pair {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

/// Layered circuit with the same bulk action on `X_0`, `Z_0` as a
/// translation-invariant local map given by its image pair.
pub fn witness_for_pair(pair: &ImagePair) -> Result<LayeredCircuit, WitnessError> {
    let (family, _) = match pair.reflection_center() {
        Some(0) => match_family(pair),
        _ => (ClassTag::Unclassified, Default::default()),
    };
    match family {
        ClassTag::L1 => {
            let w = CliffordTableau::new(
                1,
                vec![pair.img_x.translate(1)],
                vec![pair.img_z.translate(1)],
            )
            .map_err(|_| WitnessError::Unsupported("L1".into()))?;
            Ok(LayeredCircuit {
                layers: vec![CircuitLayer::on_site(&w)],
            })
        }
        ClassTag::L3 => {
            decoration_witness(pair).ok_or_else(|| WitnessError::Unsupported("L3".into()))
        }
        ClassTag::L6 => {
            let (v1, v2) =
                decoration_factors(pair).ok_or_else(|| WitnessError::Unsupported("L6".into()))?;
            Ok(witness_for_pair(&v1)?.then(witness_for_pair(&v2)?))
        }
        ClassTag::L4 | ClassTag::L5 => {
            let r = realize_staircase(pair)
                .map_err(|_| WitnessError::Unsupported(family.to_string()))?;
            let k = r.gate.k();
            // the realized gate is a base gate followed by a basis change on its first site
            let base = super::realize::base_gate(r.base).expect("realization names a known base");
            let post = CliffordTableau::compose(&r.gate, &base.inverse()).expect("same k");
            let post =
                CliffordTableau::new(1, vec![post.img_x(1).clone()], vec![post.img_z(1).clone()])
                    .expect("post-basis acts on the first site only");
            debug_assert_eq!(k, base.k());
            let body = if commutes_with_translates(&base) {
                tiled(&base)
            } else {
                return Err(WitnessError::Unsupported(family.to_string()));
            };
            Ok(with_bases(&r.basis, body, &post))
        }
        other => Err(WitnessError::Unsupported(other.to_string())),
    }
}

/// Circuit witness for the staircase of `gate`.
pub fn circuit_depth_witness(gate: &CliffordTableau) -> Result<LayeredCircuit, WitnessError> {
    if commutes_with_translates(gate) {
        return Ok(tiled(gate));
    }
    let t = Transform::staircase(gate.clone());
    let img = |l: Letter| match t.image_of_site_pauli(l) {
        Ok(ChainImage::Local(p)) => Ok(p),
        _ => Err(WitnessError::NonLocal),
    };
    witness_for_pair(&ImagePair::new(img(Letter::X)?, img(Letter::Z)?))
}
