//! Built-in models. Couplings follow `H = sum_n sum_a J_a P^a(n)`, so the
//! usual overall minus sign is folded into each `J_a`.

use num_rational::Rational64;

use super::{Coupling, Symbol, TIHamiltonian};

fn c(n: i64) -> Coupling {
    Coupling::int(n)
}

fn s(sym: Symbol) -> Coupling {
    Coupling::symbol(sym)
}

fn half(sym: Symbol, sign: i64) -> Coupling {
    Coupling::term(sym, Rational64::new(sign, 2))
}

/// `-(XX + YY + Delta ZZ)`.
pub fn xxz() -> TIHamiltonian {
    TIHamiltonian::from_pairs(
        "xxz",
        &[
            (c(-1), "XX@0"),
            (c(-1), "YY@0"),
            (-s(Symbol::Delta), "ZZ@0"),
        ],
    )
}

/// `-(XX + YY + Delta ZZ + h Z)`.
pub fn xxz_field() -> TIHamiltonian {
    TIHamiltonian::from_pairs(
        "xxz_field",
        &[
            (c(-1), "XX@0"),
            (c(-1), "YY@0"),
            (-s(Symbol::Delta), "ZZ@0"),
            (-s(Symbol::Field), "Z@0"),
        ],
    )
}

/// `-(J1 YY + J2 XX + J3 ZZ)`.
pub fn xyz() -> TIHamiltonian {
    TIHamiltonian::from_pairs(
        "xyz",
        &[
            (-s(Symbol::J(1)), "YY@0"),
            (-s(Symbol::J(2)), "XX@0"),
            (-s(Symbol::J(3)), "ZZ@0"),
        ],
    )
}

/// `1/2 (h Z - XX)`.
pub fn ising() -> TIHamiltonian {
    TIHamiltonian::from_pairs(
        "ising",
        &[
            (half(Symbol::Field, 1), "Z@0"),
            (half(Symbol::One, -1), "XX@0"),
        ],
    )
}

/// Eight-site model unitarily equivalent to the XYZ chain.
pub fn h0_xyz() -> TIHamiltonian {
    TIHamiltonian::from_pairs(
        "h0_xyz",
        &[
            (-s(Symbol::J(1)), "ZYXYYXYZ@-3"),
            (-s(Symbol::J(2)), "ZYYIIYYZ@-3"),
            (-s(Symbol::J(3)), "ZYYZ@-1"),
        ],
    )
}

pub fn h0() -> TIHamiltonian {
    TIHamiltonian::from_pairs(
        "h0",
        &[
            (c(-1), "ZYXYYXYZ@-3"),
            (c(-1), "ZYYIIYYZ@-3"),
            (-s(Symbol::Delta), "ZYYZ@-1"),
        ],
    )
}

pub fn h1() -> TIHamiltonian {
    TIHamiltonian::from_pairs(
        "h1",
        &[
            (c(-1), "ZXXZ@-1"),
            (c(-1), "ZYYZ@-1"),
            (-s(Symbol::Delta), "ZZ@0"),
        ],
    )
}

pub fn h2() -> TIHamiltonian {
    TIHamiltonian::from_pairs(
        "h2",
        &[
            (c(-1), "ZIXXIZ@-2"),
            (c(-1), "ZIYYIZ@-2"),
            (-s(Symbol::Delta), "ZZ@0"),
        ],
    )
}

pub fn h3() -> TIHamiltonian {
    TIHamiltonian::from_pairs(
        "h3",
        &[
            (c(-1), "ZZXXZZ@-2"),
            (c(-1), "ZZYYZZ@-2"),
            (-s(Symbol::Delta), "ZZ@0"),
        ],
    )
}

pub fn h4() -> TIHamiltonian {
    TIHamiltonian::from_pairs(
        "h4",
        &[
            (c(-1), "ZXIIXZ@-2"),
            (c(-1), "ZYYYYZ@-2"),
            (-s(Symbol::Delta), "ZYYZ@-1"),
        ],
    )
}

/// Next-nearest-neighbour Ising form reached by Kramers-Wannier.
pub fn hpp() -> TIHamiltonian {
    TIHamiltonian::from_pairs(
        "hpp",
        &[
            (c(-1), "Z@0"),
            (-s(Symbol::Delta), "XIX@0"),
            (c(1), "XZX@-1"),
            (-s(Symbol::Field), "XX@0"),
        ],
    )
}

pub fn hppp() -> TIHamiltonian {
    TIHamiltonian::from_pairs(
        "hppp",
        &[
            (c(-1), "Z@0"),
            (c(1), "XIX@0"),
            (-s(Symbol::Delta), "XZX@-1"),
        ],
    )
}

/// Decorated XXZ chain with the field term `h Z_{n-1} Y_n Z_{n+1}`.
pub fn htilde() -> TIHamiltonian {
    TIHamiltonian::from_pairs(
        "htilde",
        &[
            (-s(Symbol::Delta), "ZXXZ@-1"),
            (c(-1), "ZYYZ@-1"),
            (c(-1), "ZZ@0"),
            (-s(Symbol::Field), "ZYZ@-1"),
        ],
    )
}

/// Free-fermion chain with hoppings `t_a` for `|a| <= range`.
pub fn hfree_range(range: usize) -> TIHamiltonian {
    let mut pairs: Vec<(Coupling, String)> = vec![(half(Symbol::T(0), 1), "Z@0".to_string())];
    for a in 1..=range {
        let z = "Z".repeat(a - 1);
        pairs.push((half(Symbol::T(a as i32), -1), format!("X{z}X@0")));
        pairs.push((half(Symbol::T(-(a as i32)), -1), format!("Y{z}Y@0")));
    }
    let refs: Vec<(Coupling, &str)> = pairs.iter().map(|(c, p)| (c.clone(), p.as_str())).collect();
    TIHamiltonian::from_pairs("hfree", &refs)
}

pub fn hfree() -> TIHamiltonian {
    hfree_range(3)
}

/// Constructor for a built-in model.
pub type ModelFn = fn() -> TIHamiltonian;

pub fn named_models() -> Vec<(&'static str, ModelFn)> {
    vec![
        ("xxz", xxz as ModelFn),
        ("xxz_field", xxz_field),
        ("xyz", xyz),
        ("ising", ising),
        ("h0", h0),
        ("h0_xyz", h0_xyz),
        ("h1", h1),
        ("h2", h2),
        ("h3", h3),
        ("h4", h4),
        ("hpp", hpp),
        ("hppp", hppp),
        ("htilde", htilde),
        ("hfree", hfree),
    ]
}

pub fn model_by_name(name: &str) -> Option<TIHamiltonian> {
    let lower = name.to_ascii_lowercase();
    named_models()
        .into_iter()
        .find(|(n, _)| *n == lower)
        .map(|(_, f)| f())
}
