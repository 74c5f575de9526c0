//! Exact couplings: rational linear combinations of named parameters.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Parameter a coupling may depend on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    One,
    Delta,
    Field,
    /// `J1`, `J2`, `J3`.
    J(u8),
    /// Free-fermion hopping `t_a`.
    T(i32),
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::One => write!(f, "1"),
            Symbol::Delta => write!(f, "Delta"),
            Symbol::Field => write!(f, "h"),
            Symbol::J(i) => write!(f, "J{i}"),
            Symbol::T(a) => write!(f, "t{a}"),
        }
    }
}

impl FromStr for Symbol {
    type Err = CouplingParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "1" => Ok(Symbol::One),
            "Delta" | "delta" => Ok(Symbol::Delta),
            "h" => Ok(Symbol::Field),
            _ => {
                if let Some(i) = s.strip_prefix('J').and_then(|r| r.parse::<u8>().ok()) {
                    Ok(Symbol::J(i))
                } else if let Some(a) = s.strip_prefix('t').and_then(|r| r.parse::<i32>().ok()) {
                    Ok(Symbol::T(a))
                } else {
                    Err(CouplingParseError::UnknownSymbol(s.to_string()))
                }
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CouplingParseError {
    #[error("unknown parameter {0:?}")]
    UnknownSymbol(String),
    #[error("bad coefficient {0:?}")]
    BadNumber(String),
    #[error("empty coupling")]
    Empty,
}

/// Numeric values for the symbols; unspecified `J` and `t` default to zero.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Params {
    pub delta: f64,
    pub h: f64,
    pub j: BTreeMap<u8, f64>,
    pub t: BTreeMap<i32, f64>,
}

impl Params {
    pub fn xxz(delta: f64, h: f64) -> Self {
        Params {
            delta,
            h,
            ..Default::default()
        }
    }

    pub fn value(&self, s: Symbol) -> f64 {
        match s {
            Symbol::One => 1.0,
            Symbol::Delta => self.delta,
            Symbol::Field => self.h,
            Symbol::J(i) => self.j.get(&i).copied().unwrap_or(0.0),
            Symbol::T(a) => self.t.get(&a).copied().unwrap_or(0.0),
        }
    }
}

/// `sum_s c_s * s` with rational `c_s`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Coupling(BTreeMap<Symbol, Rational64>);

impl Coupling {
    pub fn zero() -> Self {
        Coupling(BTreeMap::new())
    }

    pub fn constant(c: Rational64) -> Self {
        Coupling::term(Symbol::One, c)
    }

    pub fn int(c: i64) -> Self {
        Coupling::constant(Rational64::from_integer(c))
    }

    pub fn symbol(s: Symbol) -> Self {
        Coupling::term(s, Rational64::one())
    }

    pub fn term(s: Symbol, c: Rational64) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(s, c);
        }
        Coupling(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Symbol, Rational64)> + '_ {
        self.0.iter().map(|(s, c)| (*s, *c))
    }

    pub fn scale(&self, r: Rational64) -> Self {
        if r.is_zero() {
            return Coupling::zero();
        }
        Coupling(self.0.iter().map(|(s, c)| (*s, c * r)).collect())
    }

    pub fn eval(&self, p: &Params) -> f64 {
        self.0
            .iter()
            .map(|(s, c)| c.to_f64().unwrap_or(f64::NAN) * p.value(*s))
            .sum()
    }

    /// Replaces `sym` by a numeric value.
    pub fn substitute(&self, sym: Symbol, value: Rational64) -> Self {
        let mut out = Coupling(
            self.0
                .iter()
                .filter(|(s, _)| **s != sym)
                .map(|(s, c)| (*s, *c))
                .collect(),
        );
        if let Some(c) = self.0.get(&sym) {
            out = out + Coupling::constant(c * value);
        }
        out
    }

    /// The constant value, if the coupling depends on no parameter.
    pub fn as_constant(&self) -> Option<Rational64> {
        match self.0.len() {
            0 => Some(Rational64::zero()),
            1 => self.0.get(&Symbol::One).copied(),
            _ => None,
        }
    }
}

impl Add for Coupling {
    type Output = Coupling;

    fn add(mut self, rhs: Coupling) -> Coupling {
        for (s, c) in rhs.0 {
            let e = self.0.entry(s).or_insert_with(Rational64::zero);
            *e += c;
            if e.is_zero() {
                self.0.remove(&s);
            }
        }
        self
    }
}

impl Neg for Coupling {
    type Output = Coupling;

    fn neg(self) -> Coupling {
        self.scale(-Rational64::one())
    }
}

impl Mul<i64> for Coupling {
    type Output = Coupling;

    fn mul(self, rhs: i64) -> Coupling {
        self.scale(Rational64::from_integer(rhs))
    }
}

fn fmt_ratio(r: Rational64) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Coupling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.0.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match s {
                Symbol::One => write!(f, "{}", fmt_ratio(mag))?,
                _ if mag.is_one() => write!(f, "{s}")?,
                _ => write!(f, "{}*{s}", fmt_ratio(mag))?,
            }
        }
        Ok(())
    }
}

fn parse_ratio(s: &str) -> Result<Rational64, CouplingParseError> {
    let bad = || CouplingParseError::BadNumber(s.to_string());
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Rational64::new(n, d));
    }
    if let Ok(i) = s.parse::<i64>() {
        return Ok(Rational64::from_integer(i));
    }
    let x: f64 = s.parse().map_err(|_| bad())?;
    Rational64::approximate_float(x).ok_or_else(bad)
}

impl FromStr for Coupling {
    type Err = CouplingParseError;

    /// Parses forms like `-Delta`, `1/2*h - 1/2`, `0.3`, `2*t-1`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(CouplingParseError::Empty);
        }
        // split into signed summands; a '-' right after 't' is part of a hopping index
        let mut parts: Vec<String> = Vec::new();
        let mut cur = String::new();
        let chars: Vec<char> = compact.chars().collect();
        for (i, &ch) in chars.iter().enumerate() {
            let index_sign = ch == '-' && i > 0 && chars[i - 1] == 't';
            if (ch == '+' || ch == '-')
                && !index_sign
                && !cur.is_empty()
                && !cur.ends_with(['*', '/', 'e', 'E'])
            {
                parts.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        parts.push(cur);
        let mut out = Coupling::zero();
        for part in parts {
            let (sign, body) = match part.strip_prefix('-') {
                Some(b) => (-Rational64::one(), b),
                None => (Rational64::one(), part.strip_prefix('+').unwrap_or(&part)),
            };
            let (coef, sym) = match body.rsplit_once('*') {
                Some((c, s)) => (parse_ratio(c)?, s.parse::<Symbol>()?),
                None => match body.parse::<Symbol>() {
                    Ok(s) => (Rational64::one(), s),
                    Err(_) => (parse_ratio(body)?, Symbol::One),
                },
            };
            out = out + Coupling::term(sym, sign * coef);
        }
        Ok(out)
    }
}

impl Serialize for Coupling {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.as_constant() {
            Some(c) if c.is_integer() => s.serialize_i64(c.to_integer()),
            _ => s.serialize_str(&self.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Coupling {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Float(f64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(i) => Ok(Coupling::int(i)),
            Repr::Float(x) => Rational64::approximate_float(x)
                .map(Coupling::constant)
                .ok_or_else(|| {
                    serde::de::Error::custom(format!("coupling {x} is not representable"))
                }),
            Repr::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        for text in ["-Delta", "1/2*h - 1/2", "-1", "2*t-1 + J3", "0"] {
            let c: Coupling = text.parse().unwrap();
            let back: Coupling = c.to_string().parse().unwrap();
            assert_eq!(c, back, "{text}");
        }
        let c: Coupling = "1/2*h - 1/2".parse().unwrap();
        assert_eq!(c.eval(&Params::xxz(0.0, 3.0)), 1.0);
    }

    #[test]
    fn cancellation_removes_symbol() {
        let c = Coupling::symbol(Symbol::Delta) + -Coupling::symbol(Symbol::Delta);
        assert!(c.is_zero());
    }

    #[test]
    fn substitution() {
        let c: Coupling = "-Delta + 2*h".parse().unwrap();
        let d = c.substitute(Symbol::Delta, Rational64::new(1, 2));
        assert_eq!(d.to_string(), "-1/2 + 2*h");
        assert!(c
            .substitute(Symbol::Field, Rational64::zero())
            .substitute(Symbol::Delta, Rational64::zero())
            .is_zero());
    }

    #[test]
    fn float_input() {
        let c: Coupling = "0.25".parse().unwrap();
        assert_eq!(c, Coupling::constant(Rational64::new(1, 4)));
    }
}
