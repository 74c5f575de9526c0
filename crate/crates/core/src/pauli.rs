//! Phased Pauli strings on a one-dimensional integer lattice.
//!
//! A string is a global phase `i^s` times a product of single-site letters on a
//! closed window `[lo, hi]`. Letters use the bit-pair encoding `x | z << 1`, with
//! `Y = i X Z` so that every letter is Hermitian on its own.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Single-site Pauli letter. The discriminant is the `(x, z)` bit pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Letter {
    I = 0,
    X = 1,
    Z = 2,
    Y = 3,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::I, Letter::X, Letter::Y, Letter::Z];
    pub const NONTRIVIAL: [Letter; 3] = [Letter::X, Letter::Y, Letter::Z];

    #[inline]
    pub fn from_bits(x: bool, z: bool) -> Letter {
        Self::from_code(x as u8 | (z as u8) << 1)
    }

    #[inline]
    pub fn from_code(code: u8) -> Letter {
        match code & 3 {
            0 => Letter::I,
            1 => Letter::X,
            2 => Letter::Z,
            _ => Letter::Y,
        }
    }

    #[inline]
    pub fn code(self) -> u8 {
        self as u8
    }

    #[inline]
    pub fn x(self) -> bool {
        self.code() & 1 == 1
    }

    #[inline]
    pub fn z(self) -> bool {
        self.code() & 2 == 2
    }

    pub fn is_identity(self) -> bool {
        self == Letter::I
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'I' => Some(Letter::I),
            'X' => Some(Letter::X),
            'Y' => Some(Letter::Y),
            'Z' => Some(Letter::Z),
            _ => None,
        }
    }

    /// Single-site product `a * b = i^s c`.
    #[inline]
    pub fn times(self, other: Letter) -> (Phase, Letter) {
        let (a, b) = (self.code() as usize, other.code() as usize);
        (Phase(LETTER_PHASE[a][b]), Letter::from_code((a ^ b) as u8))
    }

    /// True when the two letters anticommute.
    #[inline]
    pub fn anticommutes(self, other: Letter) -> bool {
        self != Letter::I && other != Letter::I && self != other
    }

    /// The third letter, `i a b` up to sign, for two distinct non-identity letters.
    pub fn complement(self, other: Letter) -> Letter {
        Letter::from_code(self.code() ^ other.code())
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_char(self.as_char())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

// LETTER_PHASE[a][b] = s with a*b = i^s (a^b), letters as i^{xz} X^x Z^z.
// s = x1 z1 + x2 z2 + 2 z1 x2 - x3 z3 (mod 4).
const LETTER_PHASE: [[u8; 4]; 4] = {
    let mut t = [[0u8; 4]; 4];
    let mut a = 0;
    while a < 4 {
        let mut b = 0;
        while b < 4 {
            let (x1, z1) = ((a & 1) as i32, (a >> 1) as i32);
            let (x2, z2) = ((b & 1) as i32, (b >> 1) as i32);
            let (x3, z3) = (x1 ^ x2, z1 ^ z2);
            let s = x1 * z1 + x2 * z2 + 2 * z1 * x2 - x3 * z3;
            t[a][b] = s.rem_euclid(4) as u8;
            b += 1;
        }
        a += 1;
    }
    t
};

/// Element `i^s` of the group of fourth roots of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn from_exponent(s: i64) -> Phase {
        Phase(s.rem_euclid(4) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn from_sign(negative: bool) -> Phase {
        if negative {
            Phase::MINUS_ONE
        } else {
            Phase::ONE
        }
    }

    pub fn is_real(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// `+1` or `-1` for real phases; `None` otherwise.
    pub fn sign(self) -> Option<i8> {
        match self.0 {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    pub fn conj(self) -> Phase {
        Phase((4 - self.0) % 4)
    }

    fn prefix(self) -> &'static str {
        ["+", "+i", "-", "-i"][self.0 as usize]
    }
}

impl Mul for Phase {
    type Output = Phase;
    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 4)
    }
}

impl Neg for Phase {
    type Output = Phase;
    fn neg(self) -> Phase {
        self * Phase::MINUS_ONE
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParsePauliError {
    #[error("missing '@' site offset in {0:?}")]
    MissingOffset(String),
    #[error("bad site offset {0:?}")]
    BadOffset(String),
    #[error("unexpected character {ch:?} at column {column} in {text:?}")]
    BadLetter {
        text: String,
        ch: char,
        column: usize,
    },
    #[error("empty letter list in {0:?}")]
    Empty(String),
}

/// Phased Pauli string in canonical form: the window endpoints carry
/// non-identity letters, or the window is empty for a pure phase.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliString {
    lo: i64,
    letters: Vec<Letter>,
    phase: Phase,
}

impl Default for PauliString {
    fn default() -> Self {
        Self::identity()
    }
}

impl PauliString {
    pub fn identity() -> Self {
        PauliString {
            lo: 0,
            letters: Vec::new(),
            phase: Phase::ONE,
        }
    }

    pub fn scalar(phase: Phase) -> Self {
        PauliString {
            lo: 0,
            letters: Vec::new(),
            phase,
        }
    }

    pub fn single(site: i64, letter: Letter) -> Self {
        Self::from_letters(site, vec![letter], Phase::ONE)
    }

    /// Builds a string from letters starting at `lo`; interior and edge
    /// identities are allowed and trimmed.
    pub fn from_letters(lo: i64, letters: Vec<Letter>, phase: Phase) -> Self {
        let mut p = PauliString { lo, letters, phase };
        p.canonicalize();
        p
    }

    /// Product of single-site letters given as `(site, letter)`; repeated sites
    /// are multiplied in the order given.
    pub fn from_sites<I: IntoIterator<Item = (i64, Letter)>>(sites: I) -> Self {
        sites
            .into_iter()
            .fold(Self::identity(), |acc, (n, l)| &acc * &Self::single(n, l))
    }

    fn canonicalize(&mut self) {
        let first = self.letters.iter().position(|l| !l.is_identity());
        match first {
            None => {
                self.letters.clear();
                self.lo = 0;
            }
            Some(f) => {
                let last = self.letters.iter().rposition(|l| !l.is_identity()).unwrap();
                self.letters.truncate(last + 1);
                self.letters.drain(..f);
                self.lo += f as i64;
            }
        }
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn with_phase(mut self, phase: Phase) -> Self {
        self.phase = phase;
        self
    }

    pub fn times_phase(mut self, phase: Phase) -> Self {
        self.phase = self.phase * phase;
        self
    }

    /// Same letters with phase `+1`.
    pub fn unsigned(&self) -> Self {
        self.clone().with_phase(Phase::ONE)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// First site of the window. Zero for a pure phase.
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Last site of the window, `None` for a pure phase.
    pub fn hi(&self) -> Option<i64> {
        if self.letters.is_empty() {
            None
        } else {
            Some(self.lo + self.letters.len() as i64 - 1)
        }
    }

    pub fn window(&self) -> Option<(i64, i64)> {
        self.hi().map(|h| (self.lo, h))
    }

    pub fn width(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_hermitian(&self) -> bool {
        self.phase.is_real()
    }

    pub fn letter_at(&self, site: i64) -> Letter {
        let off = site - self.lo;
        if off < 0 || off >= self.letters.len() as i64 {
            Letter::I
        } else {
            self.letters[off as usize]
        }
    }

    /// Non-identity sites in increasing order.
    pub fn support(&self) -> impl Iterator<Item = (i64, Letter)> + '_ {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, l)| !l.is_identity())
            .map(move |(i, &l)| (self.lo + i as i64, l))
    }

    pub fn weight(&self) -> usize {
        self.letters.iter().filter(|l| !l.is_identity()).count()
    }

    pub fn translate(&self, j: i64) -> Self {
        if self.letters.is_empty() {
            return self.clone();
        }
        PauliString {
            lo: self.lo + j,
            letters: self.letters.clone(),
            phase: self.phase,
        }
    }

    /// Letters (without phase) restricted to the closed range `[a, b]`.
    pub fn restrict(&self, a: i64, b: i64) -> Self {
        if b < a {
            return Self::identity();
        }
        let letters = (a..=b).map(|n| self.letter_at(n)).collect();
        Self::from_letters(a, letters, Phase::ONE)
    }

    /// Letters outside `[a, b]`, keeping the phase.
    pub fn remove_range(&self, a: i64, b: i64) -> Self {
        let letters = self
            .letters
            .iter()
            .enumerate()
            .map(|(i, &l)| {
                let n = self.lo + i as i64;
                if n >= a && n <= b {
                    Letter::I
                } else {
                    l
                }
            })
            .collect();
        Self::from_letters(self.lo, letters, self.phase)
    }

    pub fn multiply(&self, other: &PauliString) -> PauliString {
        if other.letters.is_empty() {
            return self.clone().times_phase(other.phase);
        }
        if self.letters.is_empty() {
            return other.clone().times_phase(self.phase);
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().unwrap().max(other.hi().unwrap());
        let mut phase = self.phase * other.phase;
        let mut letters = Vec::with_capacity((hi - lo + 1) as usize);
        for n in lo..=hi {
            let (ph, l) = self.letter_at(n).times(other.letter_at(n));
            phase = phase * ph;
            letters.push(l);
        }
        Self::from_letters(lo, letters, phase)
    }

    /// True iff `self * other == other * self`.
    pub fn commutes(&self, other: &PauliString) -> bool {
        let (a, b) = match (self.window(), other.window()) {
            (Some(x), Some(y)) => (x.0.max(y.0), x.1.min(y.1)),
            _ => return true,
        };
        let mut parity = false;
        for n in a..=b {
            if self.letter_at(n).anticommutes(other.letter_at(n)) {
                parity = !parity;
            }
        }
        !parity
    }

    /// Hermitian conjugate: letters are Hermitian, so only the phase changes.
    pub fn adjoint(&self) -> Self {
        self.clone().with_phase(self.phase.conj())
    }

    /// Mirror image about site `center`: site `n` goes to `2 * center - n`.
    pub fn reflect(&self, center: i64) -> Self {
        match self.hi() {
            None => self.clone(),
            Some(hi) => {
                let mut letters = self.letters.clone();
                letters.reverse();
                Self::from_letters(2 * center - hi, letters, self.phase)
            }
        }
    }

    /// Ordering by canonical text, used wherever the output order must be stable.
    pub fn text_cmp(&self, other: &PauliString) -> Ordering {
        self.to_string().cmp(&other.to_string())
    }

    fn parse_text(text: &str) -> Result<PauliString, ParsePauliError> {
        let t = text.trim();
        let (phase, rest, skip) = if let Some(r) = t.strip_prefix("+i") {
            (Phase::I, r, 2)
        } else if let Some(r) = t.strip_prefix("-i") {
            (Phase::MINUS_I, r, 2)
        } else if let Some(r) = t.strip_prefix('+') {
            (Phase::ONE, r, 1)
        } else if let Some(r) = t.strip_prefix('-') {
            (Phase::MINUS_ONE, r, 1)
        } else {
            (Phase::ONE, t, 0)
        };
        let (body, off) = rest
            .split_once('@')
            .ok_or_else(|| ParsePauliError::MissingOffset(text.to_string()))?;
        if body.is_empty() {
            return Err(ParsePauliError::Empty(text.to_string()));
        }
        let lo: i64 = off
            .parse()
            .map_err(|_| ParsePauliError::BadOffset(off.to_string()))?;
        let mut letters = Vec::with_capacity(body.len());
        for (i, c) in body.chars().enumerate() {
            let l = Letter::from_char(c).ok_or_else(|| ParsePauliError::BadLetter {
                text: text.to_string(),
                ch: c,
                column: skip + i + 1,
            })?;
            letters.push(l);
        }
        Ok(Self::from_letters(lo, letters, phase))
    }
}

impl PartialOrd for PauliString {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PauliString {
    fn cmp(&self, other: &Self) -> Ordering {
        self.text_cmp(other)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.phase.prefix())?;
        if self.letters.is_empty() {
            return f.write_str("I@0");
        }
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        write!(f, "@{}", self.lo)
    }
}

impl FromStr for PauliString {
    type Err = ParsePauliError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_text(s)
    }
}

impl Serialize for PauliString {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PauliString {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Mul for &PauliString {
    type Output = PauliString;
    fn mul(self, rhs: &PauliString) -> PauliString {
        self.multiply(rhs)
    }
}

impl Mul for PauliString {
    type Output = PauliString;
    fn mul(self, rhs: PauliString) -> PauliString {
        self.multiply(&rhs)
    }
}

impl Neg for PauliString {
    type Output = PauliString;
    fn neg(self) -> PauliString {
        self.times_phase(Phase::MINUS_ONE)
    }
}

impl Neg for &PauliString {
    type Output = PauliString;
    fn neg(self) -> PauliString {
        self.clone().times_phase(Phase::MINUS_ONE)
    }
}

/// Shorthand parser for tests and the built-in libraries. Panics on bad input.
pub fn ps(text: &str) -> PauliString {
    text.parse()
        .unwrap_or_else(|e| panic!("bad Pauli literal {text:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zx_is_i_y() {
        let p = &ps("Z@0") * &ps("X@0");
        assert_eq!(p, ps("+iY@0"));
    }

    #[test]
    fn identity_is_neutral() {
        let p = ps("-XYZ@-3");
        assert_eq!(&PauliString::identity() * &p, p);
        assert_eq!(&p * &PauliString::identity(), p);
    }

    #[test]
    fn xx_times_zz() {
        assert_eq!(&ps("XX@1") * &ps("ZZ@1"), ps("-YY@1"));
    }

    #[test]
    fn commutation_examples() {
        assert!(ps("X@1").commutes(&ps("Z@2")));
        assert!(!ps("X@1").commutes(&ps("Z@1")));
        assert!(ps("XX@1").commutes(&ps("ZZ@1")));
    }

    #[test]
    fn translate_examples() {
        assert_eq!(ps("Y@0").translate(3), ps("Y@3"));
        let p = ps("-ZXY@4");
        assert_eq!(p.translate(0), p);
        assert_eq!(ps("XX@1").translate(5), ps("XX@6"));
    }

    #[test]
    fn text_format() {
        assert_eq!(ps("-ZYYZ@-1").to_string(), "-ZYYZ@-1");
        assert_eq!(PauliString::identity().to_string(), "+I@0");
        assert_eq!(ps("IXI@0").to_string(), "+X@1");
        assert_eq!(ps("III@7"), PauliString::identity());
        assert_eq!(ps("-iI@3").to_string(), "-iI@0");
        assert!(matches!(
            "XQ@0".parse::<PauliString>(),
            Err(ParsePauliError::BadLetter { column: 2, .. })
        ));
        assert!("XZ".parse::<PauliString>().is_err());
    }

    #[test]
    fn letter_table_matches_definition() {
        // X Z = -i Y, Z X = i Y, X Y = i Z, Y X = -i Z
        assert_eq!(Letter::X.times(Letter::Z), (Phase::MINUS_I, Letter::Y));
        assert_eq!(Letter::Z.times(Letter::X), (Phase::I, Letter::Y));
        assert_eq!(Letter::X.times(Letter::Y), (Phase::I, Letter::Z));
        assert_eq!(Letter::Y.times(Letter::X), (Phase::MINUS_I, Letter::Z));
        for l in Letter::ALL {
            assert_eq!(l.times(l), (Phase::ONE, Letter::I));
        }
    }

    #[test]
    fn reflect_about_center() {
        assert_eq!(ps("XYZ@-1").reflect(0), ps("ZYX@-1"));
        assert_eq!(ps("X@2").reflect(0), ps("X@-2"));
    }
}
