//! Translation-invariant Hamiltonians `H = sum_n sum_a J_a P^a(n)` and their
//! images under chain transforms.

mod coupling;
pub mod models;

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chain::{ChainError, ChainImage, Transform};
use crate::pauli::{Letter, PauliString, Phase};

pub use coupling::{Coupling, CouplingParseError, Params, Symbol};

#[derive(Debug, Error)]
pub enum HamiltonianError {
    #[error("term {term} has a non-local image {image}")]
    NonLocalTerm { term: String, image: String },
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error("term {0} is not a Hermitian Pauli string")]
    NotHermitian(String),
    #[error("unknown model {name:?}; known models: {known}")]
    UnknownModel { name: String, known: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("cannot parse {path}: {message}")]
    Parse { path: String, message: String },
}

/// One coupling with its Pauli string. The string is stored with phase `+1`;
/// its window is relative to the summation index `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    #[serde(rename = "J")]
    pub coupling: Coupling,
    #[serde(rename = "P")]
    pub op: PauliString,
}

impl Term {
    /// Folds a sign in the string's phase into the coupling.
    pub fn new(coupling: Coupling, op: PauliString) -> Result<Term, HamiltonianError> {
        match op.phase().sign() {
            Some(s) => Ok(Term {
                coupling: coupling * s as i64,
                op: op.with_phase(Phase::ONE),
            }),
            None => Err(HamiltonianError::NotHermitian(op.to_string())),
        }
    }

    /// The string written with site labels relative to `n`, e.g. `Z[n-1] X[n] X[n+1] Z[n+2]`.
    pub fn site_labels(&self) -> String {
        self.op
            .support()
            .map(|(site, l)| match site {
                0 => format!("{l}[n]"),
                s if s > 0 => format!("{l}[n+{s}]"),
                s => format!("{l}[n{s}]"),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TIHamiltonian {
    #[serde(default)]
    pub name: String,
    pub terms: Vec<Term>,
}

impl fmt::Display for TIHamiltonian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} = sum_n (", self.name)?;
        for t in &self.terms {
            writeln!(f, "  {:>12}  {}", t.coupling.to_string(), t.site_labels())?;
        }
        write!(f, ")")
    }
}

impl TIHamiltonian {
    pub fn new(name: impl Into<String>, terms: Vec<Term>) -> Self {
        TIHamiltonian {
            name: name.into(),
            terms,
        }
        .canonical()
    }

    /// Builds from `(coupling, pauli text)` pairs.
    pub fn from_pairs(name: &str, pairs: &[(Coupling, &str)]) -> Self {
        let terms = pairs
            .iter()
            .map(|(c, p)| {
                Term::new(c.clone(), p.parse().expect("valid Pauli text")).expect("Hermitian term")
            })
            .collect();
        TIHamiltonian::new(name, terms)
    }

    /// Merges terms equal up to translation (keeping the first anchor) and
    /// drops zero couplings. Term order is otherwise preserved.
    pub fn canonical(mut self) -> Self {
        let mut merged: Vec<Term> = Vec::new();
        for t in self.terms {
            let key = t.op.translate(-t.op.lo());
            match merged
                .iter_mut()
                .find(|m| m.op.translate(-m.op.lo()) == key)
            {
                Some(m) => m.coupling = m.coupling.clone() + t.coupling,
                None => merged.push(t),
            }
        }
        merged.retain(|t| !t.coupling.is_zero() && !t.op.is_identity());
        self.terms = merged;
        self
    }

    /// Terms anchored at site 0 and sorted: equal for Hamiltonians that
    /// agree up to relabelling the summation index of each term.
    pub fn normalized_terms(&self) -> BTreeMap<PauliString, Coupling> {
        let mut out: BTreeMap<PauliString, Coupling> = BTreeMap::new();
        for t in &self.terms {
            let key = t.op.translate(-t.op.lo());
            let e = out.entry(key).or_default();
            *e = e.clone() + t.coupling.clone();
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn equivalent(&self, other: &TIHamiltonian) -> bool {
        self.normalized_terms() == other.normalized_terms()
    }

    /// Replaces a symbolic parameter by a number in every coupling.
    pub fn substitute(&self, sym: Symbol, value: num_rational::Rational64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coupling: t.coupling.substitute(sym, value),
                op: t.op.clone(),
            })
            .collect();
        TIHamiltonian::new(self.name.clone(), terms)
    }

    pub fn max_width(&self) -> usize {
        self.terms.iter().map(|t| t.op.width()).max().unwrap_or(0)
    }

    /// Reads TOML (by `.toml` extension) or JSON.
    pub fn from_file(path: &Path) -> Result<TIHamiltonian, HamiltonianError> {
        let text = std::fs::read_to_string(path).map_err(|e| HamiltonianError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        let parse_err = |message: String| HamiltonianError::Parse {
            path: path.display().to_string(),
            message,
        };
        let h: TIHamiltonian = if path.extension().is_some_and(|e| e == "toml") {
            toml::from_str(&text).map_err(|e| parse_err(e.to_string()))?
        } else {
            serde_json::from_str(&text).map_err(|e| parse_err(e.to_string()))?
        };
        for t in &h.terms {
            if !t.op.is_hermitian() {
                return Err(HamiltonianError::NotHermitian(t.op.to_string()));
            }
        }
        let terms = h
            .terms
            .into_iter()
            .map(|t| Term::new(t.coupling, t.op))
            .collect::<Result<_, _>>()?;
        Ok(TIHamiltonian::new(h.name, terms))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("Hamiltonian serializes")
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("Hamiltonian serializes")
    }

    /// Term instances `P^a(n)` whose support lies in `0..len`, with numeric couplings.
    pub fn open_chain_terms(&self, len: usize, params: &Params) -> Vec<(f64, PauliString)> {
        let mut out = Vec::new();
        for t in &self.terms {
            let (lo, hi) = t.op.window().expect("terms are non-trivial");
            let j = t.coupling.eval(params);
            for n in -lo..(len as i64 - hi) {
                out.push((j, t.op.translate(n)));
            }
        }
        out
    }
}

/// Image of every term under `t`, term by term (no merging).
pub fn transform_terms(h: &TIHamiltonian, t: &Transform) -> Result<Vec<Term>, HamiltonianError> {
    h.terms
        .iter()
        .map(|term| match t.image_of_string(&term.op)? {
            ChainImage::Local(p) => Term::new(term.coupling.clone(), p),
            ChainImage::NonLocal(n) => Err(HamiltonianError::NonLocalTerm {
                term: term.op.to_string(),
                image: ChainImage::NonLocal(n).to_string(),
            }),
        })
        .collect()
}

/// `t H t^dagger`, in canonical form. Image windows stay relative to the
/// source term's summation index.
pub fn transform(h: &TIHamiltonian, t: &Transform) -> Result<TIHamiltonian, HamiltonianError> {
    Ok(TIHamiltonian::new(
        format!("{t}({})", h.name),
        transform_terms(h, t)?,
    ))
}

/// Image of a local operator, e.g. an order parameter.
pub fn order_parameter_image(t: &Transform, seed: &PauliString) -> Result<ChainImage, ChainError> {
    t.image_of_string(seed)
}

/// Anticommutation graph over term instances `P^a(n)` for `n` in `window`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrustrationGraph {
    /// `(term index, n)`.
    pub vertices: Vec<(usize, i64)>,
    /// Index pairs into `vertices`, `i < j`.
    pub edges: Vec<(usize, usize)>,
}

impl FrustrationGraph {
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn vertex_index(&self, term: usize, n: i64) -> Option<usize> {
        self.vertices.iter().position(|&v| v == (term, n))
    }
}

pub fn frustration_graph(
    h: &TIHamiltonian,
    window: std::ops::RangeInclusive<i64>,
) -> FrustrationGraph {
    let vertices: Vec<(usize, i64)> = window
        .flat_map(|n| (0..h.terms.len()).map(move |a| (a, n)))
        .collect();
    let ops: Vec<PauliString> = vertices
        .iter()
        .map(|&(a, n)| h.terms[a].op.translate(n))
        .collect();
    let mut edges = Vec::new();
    for i in 0..ops.len() {
        for j in i + 1..ops.len() {
            if !ops[i].commutes(&ops[j]) {
                edges.push((i, j));
            }
        }
    }
    FrustrationGraph { vertices, edges }
}

/// Result of matching a Hamiltonian against the free-fermion form
/// `1/2 sum (t_0 Z - t_a X Z..Z X - t_-a Y Z..Z Y)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum JordanWigner {
    /// `(a, t_a)` sorted by `a`.
    Free(Vec<(i32, Coupling)>),
    NotFree {
        term: String,
    },
}

pub fn jordan_wigner_recognize(h: &TIHamiltonian) -> JordanWigner {
    let mut t: BTreeMap<i32, Coupling> = BTreeMap::new();
    for term in &h.terms {
        let letters = term.op.letters();
        let n = letters.len();
        let inner_z = n >= 2 && letters[1..n - 1].iter().all(|&l| l == Letter::Z);
        let alpha = match (letters.first(), letters.last()) {
            _ if n == 1 && letters[0] == Letter::Z => Some((0, 2)),
            (Some(Letter::X), Some(Letter::X)) if inner_z => Some(((n - 1) as i32, -2)),
            (Some(Letter::Y), Some(Letter::Y)) if inner_z => Some((-((n - 1) as i32), -2)),
            _ => None,
        };
        match alpha {
            Some((a, factor)) => {
                let e = t.entry(a).or_default();
                *e = e.clone() + term.coupling.clone() * factor;
            }
            None => {
                return JordanWigner::NotFree {
                    term: term.op.to_string(),
                }
            }
        }
    }
    JordanWigner::Free(t.into_iter().filter(|(_, c)| !c.is_zero()).collect())
}

/// Symmetry operator `prod_n P_n` on sites `0..len`, the letter on site `n`
/// being `pattern[n mod pattern.len()]`.
pub fn symmetry_string(pattern: &[Letter], len: usize) -> PauliString {
    PauliString::from_sites((0..len).map(|n| (n as i64, pattern[n % pattern.len()])))
}

/// True if every term instance inside `0..len` commutes with the symmetry string.
pub fn symmetry_commutes(h: &TIHamiltonian, pattern: &[Letter], len: usize) -> bool {
    let s = symmetry_string(pattern, len);
    h.open_chain_terms(len, &Params::default())
        .iter()
        .all(|(_, p)| p.commutes(&s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::ps;

    #[test]
    fn canonical_merges_translates() {
        let h = TIHamiltonian::from_pairs(
            "h",
            &[(Coupling::int(1), "ZZ@0"), (Coupling::int(2), "ZZ@-1")],
        );
        assert_eq!(h.terms.len(), 1);
        assert_eq!(h.terms[0].coupling, Coupling::int(3));
    }

    #[test]
    fn sign_folds_into_coupling() {
        let t = Term::new(Coupling::int(2), ps("-XZX@-1")).unwrap();
        assert_eq!(t.coupling, Coupling::int(-2));
        assert_eq!(t.op, ps("XZX@-1"));
        assert_eq!(t.site_labels(), "X[n-1] Z[n] X[n+1]");
    }

    #[test]
    fn empty_is_free() {
        let h = TIHamiltonian::new("empty", vec![]);
        assert_eq!(jordan_wigner_recognize(&h), JordanWigner::Free(vec![]));
    }
}
