//! Basic Clifford transformations on `k` sites, stored as tableaux.
//!
//! A tableau lists the images of `X_i` and `Z_i` for sites `1..=k`; the group
//! element is determined up to a global phase.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::pauli::{Letter, PauliString, Phase};

/// Names one generator `X_i` or `Z_i` (1-based site).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    X(usize),
    Z(usize),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::X(i) => write!(f, "X{i}"),
            Generator::Z(i) => write!(f, "Z{i}"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableauError {
    #[error("expected {k} images of each kind, got {nx} X images and {nz} Z images")]
    WrongCount { k: usize, nx: usize, nz: usize },
    #[error("k = {0} is not supported here")]
    UnsupportedK(usize),
    #[error("image of {gen} = {image} leaves the window 1..{k}")]
    OutOfWindow {
        gen: Generator,
        image: String,
        k: usize,
    },
    #[error("image of {gen} = {image} is not Hermitian")]
    NotHermitian { gen: Generator, image: String },
    #[error("images of {a} and {b} should {expected} but do not")]
    Commutation {
        a: Generator,
        b: Generator,
        expected: &'static str,
    },
    #[error("operator {p} is not supported on sites 1..{k}")]
    SupportOutsideWindow { p: String, k: usize },
    #[error("cannot compose tableaux on {0} and {1} sites")]
    MismatchedK(usize, usize),
    #[error("{0}")]
    Parse(String),
}

/// Images of the generators of a `k`-site Clifford element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CliffordTableau {
    k: usize,
    img_x: Vec<PauliString>,
    img_z: Vec<PauliString>,
}

#[derive(Serialize, Deserialize)]
struct TableauFile {
    k: usize,
    #[serde(rename = "imgX")]
    img_x: Vec<PauliString>,
    #[serde(rename = "imgZ")]
    img_z: Vec<PauliString>,
}

impl Serialize for CliffordTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TableauFile {
            k: self.k,
            img_x: self.img_x.clone(),
            img_z: self.img_z.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CliffordTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let f = TableauFile::deserialize(d)?;
        CliffordTableau::new(f.k, f.img_x, f.img_z).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for CliffordTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.k)
            .map(|i| format!("X{0}->{1} Z{0}->{2}", i + 1, self.img_x[i], self.img_z[i]))
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl CliffordTableau {
    /// Validated constructor.
    pub fn new(
        k: usize,
        img_x: Vec<PauliString>,
        img_z: Vec<PauliString>,
    ) -> Result<Self, TableauError> {
        let t = CliffordTableau { k, img_x, img_z };
        t.validate()?;
        Ok(t)
    }

    /// Parses images written in the text format, e.g. `&["+XZ@1", "+Z@2"]`.
    pub fn from_text(k: usize, img_x: &[&str], img_z: &[&str]) -> Result<Self, TableauError> {
        let parse = |v: &[&str]| -> Result<Vec<PauliString>, TableauError> {
            v.iter()
                .map(|s| {
                    s.parse::<PauliString>()
                        .map_err(|e| TableauError::Parse(e.to_string()))
                })
                .collect()
        };
        Self::new(k, parse(img_x)?, parse(img_z)?)
    }

    pub fn from_json(text: &str) -> Result<Self, TableauError> {
        serde_json::from_str(text).map_err(|e| TableauError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tableau serializes")
    }

    pub fn identity(k: usize) -> Self {
        let img_x = (1..=k as i64)
            .map(|i| PauliString::single(i, Letter::X))
            .collect();
        let img_z = (1..=k as i64)
            .map(|i| PauliString::single(i, Letter::Z))
            .collect();
        CliffordTableau { k, img_x, img_z }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn img_x(&self, i: usize) -> &PauliString {
        &self.img_x[i - 1]
    }

    pub fn img_z(&self, i: usize) -> &PauliString {
        &self.img_z[i - 1]
    }

    pub fn images_x(&self) -> &[PauliString] {
        &self.img_x
    }

    pub fn images_z(&self) -> &[PauliString] {
        &self.img_z
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.k)
    }

    fn generator_image(&self, g: Generator) -> &PauliString {
        match g {
            Generator::X(i) => &self.img_x[i - 1],
            Generator::Z(i) => &self.img_z[i - 1],
        }
    }

    /// Checks window, Hermiticity and the commutation relations. The report
    /// names the first failing pair in generator order `X1, Z1, X2, Z2, ...`.
    pub fn validate(&self) -> Result<(), TableauError> {
        let k = self.k;
        if self.img_x.len() != k || self.img_z.len() != k {
            return Err(TableauError::WrongCount {
                k,
                nx: self.img_x.len(),
                nz: self.img_z.len(),
            });
        }
        let gens: Vec<Generator> = (1..=k)
            .flat_map(|i| [Generator::X(i), Generator::Z(i)])
            .collect();
        for &g in &gens {
            let p = self.generator_image(g);
            let inside = match p.window() {
                Some((lo, hi)) => lo >= 1 && hi <= k as i64,
                None => false,
            };
            if !inside {
                return Err(TableauError::OutOfWindow {
                    gen: g,
                    image: p.to_string(),
                    k,
                });
            }
            if !p.is_hermitian() {
                return Err(TableauError::NotHermitian {
                    gen: g,
                    image: p.to_string(),
                });
            }
        }
        for (a_idx, &a) in gens.iter().enumerate() {
            for &b in &gens[a_idx + 1..] {
                let should_anticommute =
                    matches!((a, b), (Generator::X(i), Generator::Z(j)) if i == j);
                let commutes = self.generator_image(a).commutes(self.generator_image(b));
                if commutes == should_anticommute {
                    let expected = if should_anticommute {
                        "anticommute"
                    } else {
                        "commute"
                    };
                    return Err(TableauError::Commutation { a, b, expected });
                }
            }
        }
        Ok(())
    }

    /// Image of a single-site letter on tableau site `i` (1-based), with `Y = i X Z`.
    pub fn letter_image(&self, i: usize, letter: Letter) -> PauliString {
        match letter {
            Letter::I => PauliString::identity(),
            Letter::X => self.img_x[i - 1].clone(),
            Letter::Z => self.img_z[i - 1].clone(),
            Letter::Y => (&self.img_x[i - 1] * &self.img_z[i - 1]).times_phase(Phase::I),
        }
    }

    /// `U p U^dagger` for `p` supported on sites `1..=k`.
    pub fn conjugate(&self, p: &PauliString) -> Result<PauliString, TableauError> {
        if let Some((lo, hi)) = p.window() {
            if lo < 1 || hi > self.k as i64 {
                return Err(TableauError::SupportOutsideWindow {
                    p: p.to_string(),
                    k: self.k,
                });
            }
        }
        Ok(self.conjugate_unchecked(p))
    }

    pub(crate) fn conjugate_unchecked(&self, p: &PauliString) -> PauliString {
        let mut acc = PauliString::scalar(p.phase());
        for (site, l) in p.support() {
            acc = &acc * &self.letter_image(site as usize, l);
        }
        acc
    }

    /// Conjugates the part of `p` on sites `m..m+k-1` by this gate placed there.
    pub fn conjugate_at(&self, p: &PauliString, m: i64) -> PauliString {
        let hi = m + self.k as i64 - 1;
        let inside = p.restrict(m, hi);
        if inside.is_identity() {
            return p.clone();
        }
        let outside = p.remove_range(m, hi);
        let image = self
            .conjugate_unchecked(&inside.translate(1 - m))
            .translate(m - 1);
        &outside * &image
    }

    /// Tableau of "apply `b`, then `a`".
    pub fn compose(
        a: &CliffordTableau,
        b: &CliffordTableau,
    ) -> Result<CliffordTableau, TableauError> {
        if a.k != b.k {
            return Err(TableauError::MismatchedK(a.k, b.k));
        }
        let img_x = b.img_x.iter().map(|p| a.conjugate_unchecked(p)).collect();
        let img_z = b.img_z.iter().map(|p| a.conjugate_unchecked(p)).collect();
        Ok(CliffordTableau {
            k: a.k,
            img_x,
            img_z,
        })
    }

    /// Group inverse. The preimage of a generator `g` has `x_j` set iff `g`
    /// anticommutes with the image of `Z_j`, and `z_j` set iff it anticommutes
    /// with the image of `X_j`; the sign follows from one forward conjugation.
    pub fn inverse(&self) -> CliffordTableau {
        let preimage = |g: &PauliString| -> PauliString {
            let letters: Vec<Letter> = (0..self.k)
                .map(|j| {
                    Letter::from_bits(!g.commutes(&self.img_z[j]), !g.commutes(&self.img_x[j]))
                })
                .collect();
            let q = PauliString::from_letters(1, letters, Phase::ONE);
            let fwd = self.conjugate_unchecked(&q);
            debug_assert_eq!(fwd.unsigned(), g.unsigned());
            q.times_phase(fwd.phase().conj() * g.phase())
        };
        let img_x = (1..=self.k as i64)
            .map(|i| preimage(&PauliString::single(i, Letter::X)))
            .collect();
        let img_z = (1..=self.k as i64)
            .map(|i| preimage(&PauliString::single(i, Letter::Z)))
            .collect();
        CliffordTableau {
            k: self.k,
            img_x,
            img_z,
        }
    }

    /// Places this tableau on sites `offset+1..=offset+self.k` of a `k`-site register.
    pub fn embed(&self, k: usize, offset: usize) -> CliffordTableau {
        assert!(offset + self.k <= k, "embedding does not fit");
        let mut t = Self::identity(k);
        for i in 0..self.k {
            t.img_x[offset + i] = self.img_x[i].translate(offset as i64);
            t.img_z[offset + i] = self.img_z[i].translate(offset as i64);
        }
        t
    }

    /// The same single-site tableau on every one of `k` sites.
    pub fn on_every_site(single: &CliffordTableau, k: usize) -> CliffordTableau {
        assert_eq!(single.k, 1);
        let mut t = Self::identity(k);
        for i in 0..k {
            t.img_x[i] = single.img_x[0].translate(i as i64);
            t.img_z[i] = single.img_z[0].translate(i as i64);
        }
        t
    }

    /// Two-site swap `X1 <-> X2`, `Z1 <-> Z2`.
    pub fn swap() -> CliffordTableau {
        Self::from_text(2, &["+X@2", "+X@1"], &["+Z@2", "+Z@1"]).expect("swap is valid")
    }

    /// All valid tableaux for `k` in {1, 2}, ordered lexicographically over
    /// `(imgX1, imgZ1, imgX2, imgZ2)` by canonical text.
    pub fn enumerate(k: usize) -> Result<Vec<CliffordTableau>, TableauError> {
        if !(1..=2).contains(&k) {
            return Err(TableauError::UnsupportedK(k));
        }
        let candidates = hermitian_strings(k);
        let mut out = Vec::new();
        let mut chosen: Vec<PauliString> = Vec::with_capacity(2 * k);
        enumerate_rec(k, &candidates, &mut chosen, &mut out);
        Ok(out)
    }

    /// Order of the Clifford group on `k` sites modulo phases,
    /// `2^(k^2+2k) * prod_{j=1..k} (4^j - 1)`.
    pub fn group_order(k: u32) -> u128 {
        let mut n: u128 = 1 << (k * k + 2 * k);
        for j in 1..=k {
            n *= 4u128.pow(j) - 1;
        }
        n
    }
}

/// Every signed non-identity Hermitian string on sites `1..=k`, sorted by text.
pub fn hermitian_strings(k: usize) -> Vec<PauliString> {
    let mut v = Vec::new();
    for code in 1..4usize.pow(k as u32) {
        let letters: Vec<Letter> = (0..k)
            .map(|j| Letter::from_code(((code >> (2 * j)) & 3) as u8))
            .collect();
        let p = PauliString::from_letters(1, letters, Phase::ONE);
        v.push(p.clone());
        v.push(-p);
    }
    v.sort_by(|a, b| a.text_cmp(b));
    v
}

fn enumerate_rec(
    k: usize,
    cands: &[PauliString],
    chosen: &mut Vec<PauliString>,
    out: &mut Vec<CliffordTableau>,
) {
    let idx = chosen.len();
    if idx == 2 * k {
        let img_x = chosen.iter().step_by(2).cloned().collect();
        let img_z = chosen.iter().skip(1).step_by(2).cloned().collect();
        out.push(CliffordTableau { k, img_x, img_z });
        return;
    }
    // chosen[2i] is imgX(i+1), chosen[2i+1] is imgZ(i+1)
    for c in cands {
        let ok = chosen.iter().enumerate().all(|(j, prev)| {
            let partner = idx % 2 == 1 && j == idx - 1;
            c.commutes(prev) != partner
        });
        if ok {
            chosen.push(c.clone());
            enumerate_rec(k, cands, chosen, out);
            chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::ps;

    fn kw() -> CliffordTableau {
        CliffordTableau::from_text(2, &["+X@1", "+Z@2"], &["+ZZ@1", "+XX@1"]).unwrap()
    }

    // the two-site example used to illustrate conjugation: X1->X1X2, X2->Z1Z2, Z1->Z1, Z2->X2
    fn worked_example() -> CliffordTableau {
        CliffordTableau::from_text(2, &["+XX@1", "+ZZ@1"], &["+Z@1", "+X@2"]).unwrap()
    }

    #[test]
    fn kw_and_identity_validate() {
        assert!(kw().validate().is_ok());
        assert!(CliffordTableau::identity(3).validate().is_ok());
    }

    #[test]
    fn out_of_window_rejected() {
        let err =
            CliffordTableau::from_text(2, &["+XXZ@0", "+X@2"], &["+Z@1", "+Z@2"]).unwrap_err();
        assert!(matches!(
            err,
            TableauError::OutOfWindow {
                gen: Generator::X(1),
                ..
            }
        ));
    }

    #[test]
    fn commutation_violation_names_pair() {
        let err = CliffordTableau::from_text(2, &["+X@1", "+X@2"], &["+X@1", "+Z@2"]).unwrap_err();
        assert_eq!(
            err,
            TableauError::Commutation {
                a: Generator::X(1),
                b: Generator::Z(1),
                expected: "anticommute"
            }
        );
    }

    #[test]
    fn worked_example_conjugation() {
        let u = worked_example();
        assert_eq!(u.conjugate(&ps("XX@1")).unwrap(), ps("-YY@1"));
        assert_eq!(u.conjugate(&ps("-iI@0")).unwrap(), ps("-iI@0"));
        assert!(u.conjugate(&ps("X@3")).is_err());
    }

    #[test]
    fn compose_and_inverse() {
        let t = kw();
        let id = CliffordTableau::identity(2);
        assert_eq!(CliffordTableau::compose(&t, &id).unwrap(), t);
        assert_eq!(CliffordTableau::compose(&t, &t.inverse()).unwrap(), id);
        assert_eq!(CliffordTableau::compose(&t.inverse(), &t).unwrap(), id);
        assert!(CliffordTableau::compose(&t, &CliffordTableau::identity(3)).is_err());
    }

    #[test]
    fn group_order_formula() {
        assert_eq!(CliffordTableau::group_order(1), 24);
        assert_eq!(CliffordTableau::group_order(2), 11520);
        assert_eq!(CliffordTableau::group_order(3), 92897280);
    }

    #[test]
    fn json_round_trip() {
        let t = kw();
        let back = CliffordTableau::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
        assert_eq!(
            t.to_json(),
            r#"{"k":2,"imgX":["+X@1","+Z@2"],"imgZ":["+ZZ@1","+XX@1"]}"#
        );
    }

    #[test]
    fn conjugate_at_offset() {
        let t = kw();
        // gate on sites 5,6: X6 -> Z6
        assert_eq!(
            t.conjugate_at(&ps("-YX@5"), 5),
            -t.conjugate(&ps("YX@1")).unwrap().translate(4)
        );
        assert_eq!(t.conjugate_at(&ps("X@9"), 5), ps("X@9"));
    }
}
