//! Translation-invariant Clifford maps whose images of `X_n` and `Z_n` fit on
//! five neighbouring sites, found by brute force over the commutation
//! constraints and matched to the families L1-L6.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::chain::ClassTag;
use crate::pauli::{Letter, PauliString, Phase};

/// Radius of the image window `[-RADIUS, RADIUS]`.
pub const RADIUS: i64 = 2;

/// Images of `X_0` and `Z_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ImagePair {
    pub img_x: PauliString,
    pub img_z: PauliString,
}

impl fmt::Display for ImagePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X->{} Z->{}", self.img_x, self.img_z)
    }
}

impl ImagePair {
    pub fn new(img_x: PauliString, img_z: PauliString) -> Self {
        ImagePair { img_x, img_z }
    }

    pub fn identity() -> Self {
        ImagePair::new(
            PauliString::single(0, Letter::X),
            PauliString::single(0, Letter::Z),
        )
    }

    pub fn translate(&self, j: i64) -> Self {
        ImagePair::new(self.img_x.translate(j), self.img_z.translate(j))
    }

    /// The commutation constraints that make the pair a valid translation-invariant map.
    pub fn is_consistent(&self) -> bool {
        let (x, z) = (&self.img_x, &self.img_z);
        if !x.is_hermitian()
            || !z.is_hermitian()
            || x.is_identity()
            || z.is_identity()
            || x.commutes(z)
        {
            return false;
        }
        let reach = (x.width().max(z.width())) as i64;
        (1..=reach).all(|m| {
            x.commutes(&x.translate(m))
                && z.commutes(&z.translate(m))
                && x.commutes(&z.translate(m))
                && x.commutes(&z.translate(-m))
        })
    }

    /// Common integer reflection center of both images, if any.
    pub fn reflection_center(&self) -> Option<i64> {
        let center = |p: &PauliString| -> Option<i64> {
            let (lo, hi) = p.window()?;
            if (lo + hi) % 2 != 0 {
                return None;
            }
            let c = (lo + hi) / 2;
            (p.reflect(c) == *p).then_some(c)
        };
        let (cx, cz) = (center(&self.img_x)?, center(&self.img_z)?);
        (cx == cz).then_some(cx)
    }
}

/// An enumerated map, translated so its reflection center is site 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Survivor {
    pub pair: ImagePair,
    /// Translation removed from the raw images (`-1` for swap-type maps).
    pub shift: i64,
    pub family: ClassTag,
    pub params: BTreeMap<String, String>,
}

fn strings_in_window() -> Vec<PauliString> {
    let width = (2 * RADIUS + 1) as u32;
    (1..4usize.pow(width))
        .map(|code| {
            let letters = (0..width)
                .map(|j| Letter::from_code(((code >> (2 * j)) & 3) as u8))
                .collect();
            PauliString::from_letters(-RADIUS, letters, Phase::ONE)
        })
        .collect()
}

fn self_commuting(p: &PauliString) -> bool {
    (1..=2 * RADIUS).all(|m| p.commutes(&p.translate(m)))
}

/// Raw survivors: every signed pair on `[-2, 2]` satisfying the constraints,
/// sorted by canonical text.
pub fn consistent_pairs() -> Vec<ImagePair> {
    let singles: Vec<PauliString> = strings_in_window()
        .into_iter()
        .filter(self_commuting)
        .collect();
    let mut pairs: Vec<ImagePair> = singles
        .par_iter()
        .flat_map_iter(|x| {
            singles
                .iter()
                .filter(move |z| !x.commutes(z))
                .filter(move |z| {
                    (1..=2 * RADIUS)
                        .all(|m| x.commutes(&z.translate(m)) && x.commutes(&z.translate(-m)))
                })
                .map(move |z| (x.clone(), z.clone()))
                .collect::<Vec<_>>()
        })
        .flat_map_iter(|(x, z)| {
            let mut v = Vec::with_capacity(4);
            for sx in [Phase::ONE, Phase::MINUS_ONE] {
                for sz in [Phase::ONE, Phase::MINUS_ONE] {
                    v.push(ImagePair::new(
                        x.clone().with_phase(sx),
                        z.clone().with_phase(sz),
                    ));
                }
            }
            v
        })
        .collect();
    pairs.sort();
    pairs
}

/// All survivors with their families, ordered by `(shift, pair)`.
pub fn enumerate_5site() -> Vec<Survivor> {
    let mut out: Vec<Survivor> = consistent_pairs()
        .into_iter()
        .map(|raw| {
            let shift = raw.reflection_center();
            let (pair, shift) = match shift {
                Some(c) => (raw.translate(-c), c),
                None => (raw, 0),
            };
            let (family, params) = if shift_is_known(&pair) {
                match_family(&pair)
            } else {
                unmatched(&pair)
            };
            let family = if family == ClassTag::L1 && shift == -1 {
                ClassTag::L2
            } else {
                family
            };
            Survivor {
                pair,
                shift,
                family,
                params,
            }
        })
        .collect();
    out.sort_by(|a, b| (a.shift, &a.pair).cmp(&(b.shift, &b.pair)));
    out
}

fn shift_is_known(pair: &ImagePair) -> bool {
    pair.reflection_center() == Some(0)
}

fn unmatched(pair: &ImagePair) -> (ClassTag, BTreeMap<String, String>) {
    let mut m = BTreeMap::new();
    m.insert("X".into(), pair.img_x.to_string());
    m.insert("Z".into(), pair.img_z.to_string());
    (ClassTag::Unclassified, m)
}

fn letters_at(p: &PauliString, sites: &[i64]) -> Vec<Letter> {
    sites.iter().map(|&n| p.letter_at(n)).collect()
}

/// Family of a pair centered on site 0, with its named Paulis.
pub fn match_family(pair: &ImagePair) -> (ClassTag, BTreeMap<String, String>) {
    let (x, z) = (&pair.img_x, &pair.img_z);
    let mut params = BTreeMap::new();
    let on_site = |p: &PauliString| p.window() == Some((0, 0));
    if on_site(x) && on_site(z) {
        params.insert("P".into(), x.letters()[0].to_string());
        params.insert("Q".into(), z.letters()[0].to_string());
        return (ClassTag::L1, params);
    }
    // decorations: the set {S..A..S, S..A'..S, S_0} with a given flank pattern
    for (tag, flank) in [
        (ClassTag::L3, vec![-1, 1]),
        (ClassTag::L5, vec![-2, 2]),
        (ClassTag::L4, vec![-2, -1, 1, 2]),
    ] {
        if let Some(s) = decoration_letter(x, z, &flank) {
            params.insert("A".into(), s.to_string());
            let others: Vec<Letter> = Letter::NONTRIVIAL
                .iter()
                .copied()
                .filter(|&l| l != s)
                .collect();
            params.insert("C".into(), others[0].to_string());
            params.insert("C'".into(), others[1].to_string());
            if tag == ClassTag::L3 {
                params.insert("S".into(), s.to_string());
            }
            return (tag, params);
        }
    }
    if let Some((a, b, c)) = l6_letters(x, z) {
        params.insert("A".into(), a.to_string());
        params.insert("B".into(), b.to_string());
        params.insert("C".into(), c.to_string());
        return (ClassTag::L6, params);
    }
    unmatched(pair)
}

// Shared flank letter S if both images are S-flanked decorations on `flank`
// sites or the bare S_0, and they are not both bare.
fn decoration_letter(x: &PauliString, z: &PauliString, flank: &[i64]) -> Option<Letter> {
    let shape = |p: &PauliString| -> Option<(Letter, bool)> {
        if p.window() == Some((0, 0)) {
            return Some((p.letters()[0], false));
        }
        let fl = letters_at(p, flank);
        let s = fl[0];
        let center = p.letter_at(0);
        let support_ok = p.support().all(|(n, _)| n == 0 || flank.contains(&n));
        if support_ok
            && !s.is_identity()
            && fl.iter().all(|&l| l == s)
            && !center.is_identity()
            && center != s
        {
            Some((s, true))
        } else {
            None
        }
    };
    let (sx, dx) = shape(x)?;
    let (sz, dz) = shape(z)?;
    (sx == sz && (dx || dz)).then_some(sx)
}

// (A, B, C) if both images lie in {A B A B A, A C C C A, A_{-1} B_0 A_1}.
fn l6_letters(x: &PauliString, z: &PauliString) -> Option<(Letter, Letter, Letter)> {
    let outer = |p: &PauliString| -> Option<Letter> {
        match p.window()? {
            (-2, 2) => Some(p.letter_at(-2)),
            (-1, 1) => Some(p.letter_at(-1)),
            _ => None,
        }
    };
    let a = outer(x)?;
    if outer(z)? != a {
        return None;
    }
    for b in Letter::NONTRIVIAL {
        if b == a {
            continue;
        }
        let c = a.complement(b);
        let set = [
            PauliString::from_letters(-2, vec![a, b, a, b, a], Phase::ONE),
            PauliString::from_letters(-2, vec![a, c, c, c, a], Phase::ONE),
            PauliString::from_letters(-1, vec![a, b, a], Phase::ONE),
        ];
        let ix = set.iter().position(|s| *s == x.unsigned());
        let iz = set.iter().position(|s| *s == z.unsigned());
        if let (Some(i), Some(j)) = (ix, iz) {
            if i != j {
                return Some((a, b, c));
            }
        }
    }
    None
}

/// Every member of L1-L6 with images on `[-2, 2]`, generated from the family
/// definitions alone (used to check the enumeration is complete).
pub fn family_instances() -> Vec<(ClassTag, i64, ImagePair)> {
    let mut out = Vec::new();
    let signs = [Phase::ONE, Phase::MINUS_ONE];
    let push_pairs = |out: &mut Vec<(ClassTag, i64, ImagePair)>,
                      tag: ClassTag,
                      shift: i64,
                      set: &[PauliString]| {
        for (i, a) in set.iter().enumerate() {
            for (j, b) in set.iter().enumerate() {
                if i == j {
                    continue;
                }
                for sx in signs {
                    for sz in signs {
                        let pair =
                            ImagePair::new(a.clone().with_phase(sx), b.clone().with_phase(sz));
                        out.push((tag, shift, pair));
                    }
                }
            }
        }
    };
    let single = |l: Letter| PauliString::single(0, l);
    // L1 / L2 with every shift that fits
    for shift in -RADIUS..=RADIUS {
        let tag = if shift == -1 {
            ClassTag::L2
        } else {
            ClassTag::L1
        };
        let set: Vec<PauliString> = Letter::NONTRIVIAL.iter().map(|&l| single(l)).collect();
        push_pairs(&mut out, tag, shift, &set);
    }
    for s in Letter::NONTRIVIAL {
        let others: Vec<Letter> = Letter::NONTRIVIAL
            .iter()
            .copied()
            .filter(|&l| l != s)
            .collect();
        let (c, c2) = (others[0], others[1]);
        let id = Letter::I;
        for shift in -1..=1 {
            let set = [
                PauliString::from_letters(-1, vec![s, c, s], Phase::ONE),
                PauliString::from_letters(-1, vec![s, c2, s], Phase::ONE),
                single(s),
            ];
            push_pairs(&mut out, ClassTag::L3, shift, &set);
        }
        let l4 = [
            PauliString::from_letters(-2, vec![s, s, c, s, s], Phase::ONE),
            PauliString::from_letters(-2, vec![s, s, c2, s, s], Phase::ONE),
            single(s),
        ];
        push_pairs(&mut out, ClassTag::L4, 0, &l4);
        let l5 = [
            PauliString::from_letters(-2, vec![s, id, c, id, s], Phase::ONE),
            PauliString::from_letters(-2, vec![s, id, c2, id, s], Phase::ONE),
            single(s),
        ];
        push_pairs(&mut out, ClassTag::L5, 0, &l5);
    }
    for a in Letter::NONTRIVIAL {
        for b in Letter::NONTRIVIAL {
            if a == b {
                continue;
            }
            let c = a.complement(b);
            let set = [
                PauliString::from_letters(-2, vec![a, b, a, b, a], Phase::ONE),
                PauliString::from_letters(-2, vec![a, c, c, c, a], Phase::ONE),
                PauliString::from_letters(-1, vec![a, b, a], Phase::ONE),
            ];
            push_pairs(&mut out, ClassTag::L6, 0, &set);
        }
    }
    out
}
