//! Locality classes of two-site staircases.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::clifford::CliffordTableau;
use crate::pauli::{Letter, PauliString};

use super::{ChainError, ChainImage, Staircase, TailKind, DEFAULT_HORIZON};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ClassTag {
    L1,
    L2,
    L3,
    L4,
    L5,
    L6,
    NL1,
    NL2,
    NL3,
    NL4,
    /// Matches no known family. Reported, never forced into one.
    Unclassified,
}

impl ClassTag {
    pub const C2_CLASSES: [ClassTag; 7] = [
        ClassTag::L1,
        ClassTag::L2,
        ClassTag::L3,
        ClassTag::NL1,
        ClassTag::NL2,
        ClassTag::NL3,
        ClassTag::NL4,
    ];

    pub fn is_local(self) -> bool {
        matches!(
            self,
            ClassTag::L1 | ClassTag::L2 | ClassTag::L3 | ClassTag::L4 | ClassTag::L5 | ClassTag::L6
        )
    }

    pub fn parse(s: &str) -> Option<ClassTag> {
        use ClassTag::*;
        Some(match s {
            "L1" => L1,
            "L2" => L2,
            "L3" => L3,
            "L4" => L4,
            "L5" => L5,
            "L6" => L6,
            "NL1" => NL1,
            "NL2" => NL2,
            "NL3" => NL3,
            "NL4" => NL4,
            "Unclassified" => Unclassified,
            _ => return None,
        })
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A class tag with the named Paulis and sign data of its family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TiClass {
    pub tag: ClassTag,
    pub params: BTreeMap<String, String>,
}

impl TiClass {
    fn new(tag: ClassTag) -> Self {
        TiClass {
            tag,
            params: BTreeMap::new(),
        }
    }

    fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }
}

/// Images of `X`, `Y`, `Z` under the staircase of a two-site tableau.
pub fn letter_images(u: &CliffordTableau) -> Result<[ChainImage; 3], ChainError> {
    let s = Staircase::new(u.clone());
    Ok([
        s.image_of_site_pauli(Letter::X, DEFAULT_HORIZON)?,
        s.image_of_site_pauli(Letter::Y, DEFAULT_HORIZON)?,
        s.image_of_site_pauli(Letter::Z, DEFAULT_HORIZON)?,
    ])
}

fn signed_letter(p: &PauliString) -> String {
    let s = if p.phase().sign() == Some(-1) {
        "-"
    } else {
        "+"
    };
    format!("{s}{}", p.letters()[0])
}

/// Decoration letter if `p` is `S_{-1} A_0 S_{+1}` with `A != S`, or `S_0`.
fn decoration_of(p: &PauliString) -> Option<(Letter, Option<Letter>)> {
    match (p.window(), p.letters()) {
        (Some((0, 0)), [s]) => Some((*s, None)),
        (Some((-1, 1)), [a, c, b]) if a == b && c != a && !c.is_identity() => Some((*a, Some(*c))),
        _ => None,
    }
}

/// Assigns one of the seven classes of two-site staircases, with parameters.
///
/// Local classes are decided from the images of `X` and `Z`: single-site
/// images at the source site (L1) or one site to the left (L2), or
/// three-site decorations sharing a flanking letter `S` (L3). Non-local
/// classes follow the shape of the periodic string.
pub fn classify(u: &CliffordTableau) -> Result<TiClass, ChainError> {
    let [x, y, z] = letter_images(u)?;
    match (&x, &y, &z) {
        (ChainImage::Local(px), ChainImage::Local(_), ChainImage::Local(pz)) => {
            Ok(classify_local(px, pz))
        }
        _ => Ok(classify_string(&x, &y, &z)),
    }
}

fn classify_local(px: &PauliString, pz: &PauliString) -> TiClass {
    for (tag, site) in [(ClassTag::L1, 0), (ClassTag::L2, -1)] {
        if px.window() == Some((site, site)) && pz.window() == Some((site, site)) {
            return TiClass::new(tag)
                .with("P", signed_letter(px))
                .with("Q", signed_letter(pz));
        }
    }
    if let (Some((sx, cx)), Some((sz, cz))) = (decoration_of(px), decoration_of(pz)) {
        if sx == sz && (cx.is_some() || cz.is_some()) {
            let s = sx;
            let others: Vec<Letter> = Letter::NONTRIVIAL
                .iter()
                .copied()
                .filter(|&l| l != s)
                .collect();
            return TiClass::new(ClassTag::L3)
                .with("S", s)
                .with("P", others[0])
                .with("Q", others[1])
                .with("X", px)
                .with("Z", pz);
        }
    }
    TiClass::new(ClassTag::Unclassified)
        .with("X", px)
        .with("Z", pz)
}

fn classify_string(x: &ChainImage, y: &ChainImage, z: &ChainImage) -> TiClass {
    let kinds: Vec<TailKind> = [x, y, z]
        .iter()
        .filter_map(|i| i.non_local())
        .map(|n| n.tail_kind())
        .collect();
    let first = kinds[0];
    let tag = if kinds.iter().any(|&k| k != first) {
        ClassTag::Unclassified
    } else {
        match first {
            TailKind::Every(_) => ClassTag::NL1,
            TailKind::EverySecond(_) => ClassTag::NL2,
            TailKind::TwoOfThree(_) => ClassTag::NL3,
            TailKind::Empty => ClassTag::NL4,
            TailKind::Other => ClassTag::Unclassified,
        }
    };
    let mut c = TiClass::new(tag);
    if let Some(s) = first.letter() {
        c = c.with("S", s);
    }
    for (name, img) in [("X", x), ("Y", y), ("Z", z)] {
        match img {
            ChainImage::Local(p) => {
                c = c.with(name, p);
            }
            ChainImage::NonLocal(n) => {
                let prefix = n.prefix();
                // the letter just left of the source site, if any (P or Q of the family)
                let left = prefix.letter_at(-1);
                if !left.is_identity() {
                    c = c.with(&format!("{name}.left"), left);
                }
                c = c.with(&format!("{name}.sign"), n.sign_rule());
                let blocks = n.boundary_blocks();
                let t: Vec<String> = blocks
                    .iter()
                    .map(|b| b.iter().map(|l| l.as_char()).collect())
                    .collect();
                c = c.with(&format!("{name}.T"), t.join(","));
            }
        }
    }
    c
}
