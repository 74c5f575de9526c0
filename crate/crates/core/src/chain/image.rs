//! Bulk images of local operators under a chain transform.

use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::pauli::{Letter, PauliString, Phase};

/// Residue of the chain's last site modulo 12 in which [`SignRule`] samples
/// are expressed. With the end on a site `E = 3 (mod 6)` the sampled signs take
/// floor forms column by column (see `nl2_signed` and friends); other residues
/// permute the `floor(n/2)` and `floor(n/2) + n` columns.
pub const SIGN_FRAME_END: i64 = 3;

/// Sign of an image as a function of the source site `n`, sampled over one
/// period. For non-local images the chain's last site is taken to be
/// `SIGN_FRAME_END (mod 12)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignRule {
    samples: Vec<i8>,
}

impl SignRule {
    pub fn constant(sign: i8) -> SignRule {
        SignRule {
            samples: vec![sign],
        }
    }

    /// Builds from samples for `n = 0..samples.len()` and reduces to the
    /// minimal period. The sample count must be a multiple of the true period.
    pub fn from_samples(samples: &[i8]) -> SignRule {
        assert!(!samples.is_empty());
        let len = samples.len();
        let period = (1..=len)
            .find(|&p| len.is_multiple_of(p) && (0..len).all(|i| samples[i] == samples[i % p]))
            .unwrap();
        SignRule {
            samples: samples[..period].to_vec(),
        }
    }

    pub fn period(&self) -> usize {
        self.samples.len()
    }

    pub fn samples(&self) -> &[i8] {
        &self.samples
    }

    pub fn at(&self, n: i64) -> i8 {
        self.samples[n.rem_euclid(self.samples.len() as i64) as usize]
    }

    pub fn is_constant(&self) -> bool {
        self.samples.len() == 1
    }

    /// Finds `b` in {0, 1} with `sign(n) = (-1)^(f(n) + b)` over `span` sites,
    /// where `f` is an integer exponent such as `floor(n/2) + n`.
    pub fn match_exponent(&self, f: impl Fn(i64) -> i64, span: i64) -> Option<u8> {
        [0u8, 1].into_iter().find(|&b| {
            (0..span).all(|n| {
                let e = (f(n) + b as i64).rem_euclid(2);
                self.at(n) == if e == 0 { 1 } else { -1 }
            })
        })
    }
}

impl fmt::Display for SignRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.samples {
            f.write_str(if s > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

/// Image that grows a periodic string towards the right end of the chain.
///
/// The sweep is a deterministic machine on the frontier letters. `ops[t]` is the
/// operator after `t` gates past the seed's support, `cycle_start` and `period`
/// describe the first repeated frontier state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonLocalImage {
    pub(crate) k: usize,
    pub(crate) m0: i64,
    pub(crate) ops: Vec<PauliString>,
    pub(crate) cycle_start: usize,
    pub(crate) period: usize,
    pub(crate) sign: SignRule,
}

impl NonLocalImage {
    /// Finalized letters (and phase) when the frontier first enters its cycle.
    pub fn prefix(&self) -> PauliString {
        let c = &self.ops[self.cycle_start];
        let last = self.m0 + self.cycle_start as i64;
        let lo = c.lo().min(last);
        c.restrict(lo, last).with_phase(c.phase())
    }

    /// Site of the first letter of the repeating block.
    pub fn tail_start(&self) -> i64 {
        self.m0 + self.cycle_start as i64 + 1
    }

    /// One period of the letters emitted once the frontier cycles.
    pub fn tail(&self) -> Vec<Letter> {
        let last = &self.ops[self.cycle_start + self.period];
        (0..self.period as i64)
            .map(|i| last.letter_at(self.tail_start() + i))
            .collect()
    }

    pub fn sign_rule(&self) -> &SignRule {
        &self.sign
    }

    /// Frontier letters (the `S'`/`T` block of `k - 1` sites) for each phase of the cycle.
    pub fn boundary_blocks(&self) -> Vec<Vec<Letter>> {
        (0..self.period)
            .map(|r| {
                let t = self.cycle_start + r;
                let m = self.m0 + t as i64;
                (1..self.k as i64)
                    .map(|j| self.ops[t].letter_at(m + j))
                    .collect()
            })
            .collect()
    }

    /// The repeating block reduced to its minimal period and classified.
    pub fn tail_kind(&self) -> TailKind {
        TailKind::of(&self.tail())
    }

    /// Image on an open chain whose last site is `end` (relative to the source
    /// site) and whose first site is far enough left that every staircase factor
    /// touching the seed is present. `None` if `end` cuts into the seed's support.
    pub fn resolve(&self, end: i64) -> Option<PauliString> {
        let steps = end - self.k as i64 + 1 - self.m0;
        if steps < 0 {
            return None;
        }
        let steps = steps as usize;
        if steps < self.ops.len() {
            return Some(self.ops[steps].clone());
        }
        let (c, p) = (self.cycle_start, self.period);
        let q = (steps - c) / p;
        let r = (steps - c) % p;
        let base = &self.ops[c + r];
        let cycle_phase = self.ops[c + p].phase() * self.ops[c].phase().conj();
        let mut phase = base.phase();
        for _ in 0..q {
            phase = phase * cycle_phase;
        }
        let tail = self.tail();
        let first_tail = self.tail_start();
        let final_site = self.m0 + steps as i64;
        let base_last = self.m0 + (c + r) as i64;
        let lo = base.lo().min(first_tail);
        let hi = final_site + self.k as i64 - 1;
        let letters = (lo..=hi)
            .map(|n| {
                if n < first_tail {
                    base.letter_at(n)
                } else if n <= final_site {
                    tail[((n - first_tail) as usize) % p]
                } else {
                    base.letter_at(n - final_site + base_last)
                }
            })
            .collect();
        Some(PauliString::from_letters(lo, letters, phase))
    }
}

/// Shape of a non-local string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TailKind {
    /// `S S S ...`
    Every(Letter),
    /// `S I S I ...`
    EverySecond(Letter),
    /// `S S I S S I ...`
    TwoOfThree(Letter),
    /// Identity tail with only a travelling boundary operator.
    Empty,
    /// Anything else; never produced by a two-site staircase.
    Other,
}

impl TailKind {
    pub fn of(tail: &[Letter]) -> TailKind {
        let n = tail.len();
        let period = (1..=n)
            .find(|&p| n.is_multiple_of(p) && (0..n).all(|i| tail[i] == tail[i % p]))
            .unwrap_or(n);
        let block = &tail[..period];
        let nonid: Vec<Letter> = block.iter().copied().filter(|l| !l.is_identity()).collect();
        match (period, nonid.len()) {
            (1, 0) => TailKind::Empty,
            (1, 1) => TailKind::Every(nonid[0]),
            (2, 1) => TailKind::EverySecond(nonid[0]),
            (3, 2) if nonid[0] == nonid[1] => TailKind::TwoOfThree(nonid[0]),
            _ => TailKind::Other,
        }
    }

    pub fn letter(self) -> Option<Letter> {
        match self {
            TailKind::Every(l) | TailKind::EverySecond(l) | TailKind::TwoOfThree(l) => Some(l),
            _ => None,
        }
    }
}

/// Image of a local operator under a chain transform.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainImage {
    /// Finite image, window relative to the source site; independent of the
    /// chain length and of the source site.
    Local(PauliString),
    NonLocal(NonLocalImage),
}

impl ChainImage {
    pub fn is_local(&self) -> bool {
        matches!(self, ChainImage::Local(_))
    }

    pub fn local(&self) -> Option<&PauliString> {
        match self {
            ChainImage::Local(p) => Some(p),
            ChainImage::NonLocal(_) => None,
        }
    }

    pub fn non_local(&self) -> Option<&NonLocalImage> {
        match self {
            ChainImage::Local(_) => None,
            ChainImage::NonLocal(n) => Some(n),
        }
    }

    pub fn sign_rule(&self) -> SignRule {
        match self {
            ChainImage::Local(p) => SignRule::constant(p.phase().sign().unwrap_or(1)),
            ChainImage::NonLocal(n) => n.sign.clone(),
        }
    }
}

impl fmt::Display for ChainImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainImage::Local(p) => write!(f, "{p}"),
            ChainImage::NonLocal(n) => {
                let tail: String = n.tail().iter().map(|l| l.as_char()).collect();
                let blocks: Vec<String> = n
                    .boundary_blocks()
                    .iter()
                    .map(|b| b.iter().map(|l| l.as_char()).collect())
                    .collect();
                write!(
                    f,
                    "{} ({})*@{} sign[{}] boundary[{}]",
                    n.prefix().with_phase(Phase::ONE),
                    tail,
                    n.tail_start(),
                    n.sign,
                    blocks.join(",")
                )
            }
        }
    }
}

impl Serialize for ChainImage {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ChainImage::Local(p) => s.collect_str(p),
            ChainImage::NonLocal(n) => {
                let mut m = s.serialize_map(Some(5))?;
                m.serialize_entry("prefix", &n.prefix().with_phase(Phase::ONE))?;
                m.serialize_entry(
                    "tail",
                    &n.tail().iter().map(|l| l.as_char()).collect::<String>(),
                )?;
                m.serialize_entry("tail_start", &n.tail_start())?;
                m.serialize_entry("sign", &n.sign.to_string())?;
                let blocks: Vec<String> = n
                    .boundary_blocks()
                    .iter()
                    .map(|b| b.iter().map(|l| l.as_char()).collect())
                    .collect();
                m.serialize_entry("boundary", &blocks)?;
                m.end()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_rule_reduces_period() {
        let r = SignRule::from_samples(&[1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1]);
        assert_eq!(r.period(), 2);
        assert_eq!(r.at(-1), -1);
        assert_eq!(SignRule::from_samples(&[1; 12]), SignRule::constant(1));
    }

    #[test]
    fn exponent_matching() {
        let r = SignRule::from_samples(&[1, 1, -1, -1]);
        assert_eq!(r.match_exponent(|n| n / 2, 12), Some(0));
        assert_eq!(r.match_exponent(|n| n, 12), None);
        let r = SignRule::from_samples(&[-1, 1]);
        assert_eq!(r.match_exponent(|n| n, 12), Some(1));
    }

    #[test]
    fn tail_kinds() {
        use Letter::*;
        assert_eq!(TailKind::of(&[Z]), TailKind::Every(Z));
        assert_eq!(TailKind::of(&[I, Z]), TailKind::EverySecond(Z));
        assert_eq!(TailKind::of(&[X, I, X]), TailKind::TwoOfThree(X));
        assert_eq!(TailKind::of(&[I, I]), TailKind::Empty);
        assert_eq!(TailKind::of(&[X, Y]), TailKind::Other);
    }
}
