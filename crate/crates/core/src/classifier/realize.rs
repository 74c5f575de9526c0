//! Staircase realizations of enumerated image pairs: an on-site basis change
//! followed by the staircase of one basic Clifford on at most three sites.

use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::chain::library::{basic_u1, basic_u2, basic_u3, basic_u4};
use crate::chain::{ChainImage, Transform};
use crate::clifford::CliffordTableau;
use crate::pauli::{Letter, PauliString};

use super::five_site::ImagePair;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealizeError {
    #[error("no staircase realization found for {0}")]
    NoRealization(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Realization {
    /// Name of the base gate before the post-basis change.
    pub base: &'static str,
    /// One-site basis change applied before the staircase.
    pub basis: CliffordTableau,
    /// Basic Clifford of the staircase (base gate followed by a basis change on its first site).
    pub gate: CliffordTableau,
    /// Translation applied after the staircase. Staircases only move
    /// operators leftwards, so pairs centered right of the source need one.
    pub translation: i64,
}

impl Realization {
    pub fn transform(&self) -> Transform {
        Transform::then(
            Transform::on_site(&self.basis),
            Transform::staircase(self.gate.clone()),
        )
    }

    pub fn is_exact(&self) -> bool {
        self.translation == 0
    }

    /// Images of `X_0` and `Z_0` recomputed through the chain transform.
    pub fn images(&self) -> Option<ImagePair> {
        let t = self.transform();
        let get = |l: Letter| match t.image_of_site_pauli(l) {
            Ok(ChainImage::Local(p)) => Some(p),
            _ => None,
        };
        Some(ImagePair::new(get(Letter::X)?, get(Letter::Z)?).translate(self.translation))
    }
}

/// Cyclic shift on three sites, `X1 -> X2 -> X3 -> X1` (same for `Z`).
pub fn cycle3() -> CliffordTableau {
    CliffordTableau::from_text(3, &["+X@2", "+X@3", "+X@1"], &["+Z@2", "+Z@3", "+Z@1"])
        .expect("valid")
}

/// Swap of the last two sites, then `U1` on the first two. Its staircase is
/// the `U1` decoration translated one site to the left.
pub fn shifted_u1() -> CliffordTableau {
    CliffordTableau::compose(
        &basic_u1().embed(3, 0),
        &CliffordTableau::swap().embed(3, 1),
    )
    .expect("same k")
}

fn base_gates() -> Vec<(&'static str, CliffordTableau)> {
    vec![
        ("ID", CliffordTableau::identity(2)),
        ("SWAP", CliffordTableau::swap()),
        ("CYCLE3", cycle3()),
        ("CYCLE3_INV", cycle3().inverse()),
        ("U1", basic_u1()),
        ("U1_SHIFT", shifted_u1()),
        ("U2", basic_u2()),
        ("U3", basic_u3()),
        ("U4", basic_u4()),
    ]
}

/// Base gate by the name recorded in a [`Realization`].
pub fn base_gate(name: &str) -> Option<CliffordTableau> {
    base_gates()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, g)| g)
}

/// One-site Cliffords with the identity first, then enumeration order.
pub fn one_site_cliffords() -> Vec<CliffordTableau> {
    let id = CliffordTableau::identity(1);
    let mut v = vec![id.clone()];
    v.extend(
        CliffordTableau::enumerate(1)
            .expect("k = 1")
            .into_iter()
            .filter(|t| *t != id),
    );
    v
}

// A staircase candidate with its local images of X_0, Y_0, Z_0.
struct Candidate {
    base: &'static str,
    gate: CliffordTableau,
    images: [PauliString; 3],
}

fn candidates() -> &'static [Candidate] {
    static CANDIDATES: OnceLock<Vec<Candidate>> = OnceLock::new();
    CANDIDATES.get_or_init(|| {
        let mut out = Vec::new();
        for (base, g) in base_gates() {
            for w in one_site_cliffords() {
                let gate = CliffordTableau::compose(&w.embed(g.k(), 0), &g).expect("same k");
                let t = Transform::staircase(gate.clone());
                let img = |l: Letter| {
                    t.image_of_site_pauli(l)
                        .ok()
                        .and_then(|i| i.local().cloned())
                };
                if let (Some(x), Some(y), Some(z)) =
                    (img(Letter::X), img(Letter::Y), img(Letter::Z))
                {
                    out.push(Candidate {
                        base,
                        gate,
                        images: [x, y, z],
                    });
                }
            }
        }
        out
    })
}

fn image_of(c: &Candidate, p: &PauliString) -> PauliString {
    // p is a signed single-site letter at site 0
    let l = p.letter_at(0);
    let idx = match l {
        Letter::X => 0,
        Letter::Y => 1,
        Letter::Z => 2,
        Letter::I => return p.clone(),
    };
    c.images[idx].clone().times_phase(p.phase())
}

/// Finds a basis change and staircase reproducing `pair` exactly. When no
/// staircase reaches the pair's position, the pair is realized at its
/// reflection center and the remaining translation is recorded.
pub fn realize_staircase(pair: &ImagePair) -> Result<Realization, RealizeError> {
    if let Some(r) = search(pair) {
        return Ok(r);
    }
    if let Some(c) = pair.reflection_center().filter(|&c| c != 0) {
        if let Some(mut r) = search(&pair.translate(-c)) {
            r.translation = c;
            return Ok(r);
        }
    }
    Err(RealizeError::NoRealization(pair.to_string()))
}

fn search(pair: &ImagePair) -> Option<Realization> {
    let bases = one_site_cliffords();
    for c in candidates() {
        for b in &bases {
            let bx = b.img_x(1).translate(-1);
            let bz = b.img_z(1).translate(-1);
            if image_of(c, &bx) == pair.img_x && image_of(c, &bz) == pair.img_z {
                return Some(Realization {
                    base: c.base,
                    basis: b.clone(),
                    gate: c.gate.clone(),
                    translation: 0,
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::ps;

    #[test]
    fn u1_pair_gives_table_row() {
        let r = realize_staircase(&ImagePair::new(ps("ZYZ@-1"), ps("Z@0"))).unwrap();
        assert_eq!(r.basis, CliffordTableau::identity(1));
        assert_eq!(r.gate, basic_u1());
    }

    #[test]
    fn u2_pair_gives_table_row() {
        let r = realize_staircase(&ImagePair::new(ps("-ZZYZZ@-2"), ps("Z@0"))).unwrap();
        assert_eq!(r.basis, CliffordTableau::identity(1));
        assert_eq!(r.gate, basic_u2());
    }

    #[test]
    fn identity_pair_gives_identity() {
        let r = realize_staircase(&ImagePair::identity()).unwrap();
        assert!(r.basis.is_identity());
        assert!(r.gate.is_identity());
    }

    #[test]
    fn cycle_shifts_left_by_two() {
        let r = realize_staircase(&ImagePair::identity().translate(-2)).unwrap();
        assert_eq!(r.images().unwrap(), ImagePair::identity().translate(-2));
        assert!(r.is_exact());
    }

    #[test]
    fn shifted_decoration_is_exact() {
        let pair = ImagePair::new(ps("ZYZ@-2"), ps("Z@-1"));
        let r = realize_staircase(&pair).unwrap();
        assert!(r.is_exact());
        assert_eq!(r.images().unwrap(), pair);
    }

    #[test]
    fn right_shift_needs_translation() {
        let pair = ImagePair::identity().translate(1);
        let r = realize_staircase(&pair).unwrap();
        assert_eq!(r.translation, 1);
        assert_eq!(r.images().unwrap(), pair);
    }
}
