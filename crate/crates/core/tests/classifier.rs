//! Five-site enumeration, staircase realizations and circuit witnesses.

use std::collections::BTreeSet;

use cliffchain::chain::library::{basic_u4, decoration_v1, decoration_v2};
use cliffchain::chain::{ClassTag, Transform};
use cliffchain::classifier::*;
use cliffchain::pauli::{Letter, PauliString};

fn letter(s: &str) -> Letter {
    Letter::from_char(s.chars().next().unwrap()).unwrap()
}

#[test]
fn enumeration_matches_independent_family_generator() {
    let start = std::time::Instant::now();
    let survivors = enumerate_5site();
    assert!(start.elapsed().as_secs() < 600);
    let got: BTreeSet<(String, i64, ImagePair)> = survivors
        .iter()
        .map(|s| (s.family.to_string(), s.shift, s.pair.translate(s.shift)))
        .collect();
    let want: BTreeSet<(String, i64, ImagePair)> = family_instances()
        .into_iter()
        .map(|(tag, shift, pair)| (tag.to_string(), shift, pair.translate(shift)))
        .collect();
    assert_eq!(got.len(), survivors.len(), "survivors are distinct");
    assert_eq!(got, want);
    assert!(survivors.iter().all(|s| s.family != ClassTag::Unclassified));
}

#[test]
fn survivors_are_reflection_symmetric() {
    for s in enumerate_5site() {
        assert_eq!(s.pair.reflection_center(), Some(0), "{:?}", s.pair);
        assert_eq!(s.pair.img_x.reflect(0), s.pair.img_x);
        assert_eq!(s.pair.img_z.reflect(0), s.pair.img_z);
    }
}

#[test]
fn every_survivor_is_realized_by_a_staircase() {
    for s in enumerate_5site() {
        let raw = s.pair.translate(s.shift);
        let r = realize_staircase(&raw).unwrap_or_else(|e| panic!("{:?}: {e}", raw));
        assert!(r.gate.k() <= 3);
        assert_eq!(r.images(), Some(raw.clone()), "{:?} via {}", raw, r.base);
    }
}

#[test]
fn family_parameters_satisfy_letter_relations() {
    for s in enumerate_5site() {
        let p = &s.params;
        match s.family {
            ClassTag::L4 | ClassTag::L5 => {
                let (_, prod) = letter(&p["C"]).times(letter(&p["C'"]));
                assert_eq!(prod, letter(&p["A"]));
            }
            ClassTag::L6 => {
                let (a, b) = (letter(&p["A"]), letter(&p["B"]));
                assert_ne!(a, b);
                assert_eq!(a.times(b).1, letter(&p["C"]));
            }
            _ => {}
        }
    }
}

#[test]
fn circuit_witnesses_reproduce_centered_survivors() {
    for s in enumerate_5site() {
        if s.shift != 0 {
            continue;
        }
        match witness_for_pair(&s.pair) {
            Ok(c) => {
                assert!(c.depth() <= 8, "{:?}", s.pair);
                assert_eq!(c.images(), s.pair);
            }
            Err(e) => panic!("{:?} ({}): {e}", s.pair, s.family),
        }
    }
}

#[test]
fn deepest_row_is_two_decorations() {
    let u4 = Transform::staircase(basic_u4());
    let v = Transform::then(
        Transform::Local(decoration_v1()),
        Transform::Local(decoration_v2()),
    );
    for l in [Letter::X, Letter::Z] {
        let seed = PauliString::single(0, l);
        assert_eq!(
            u4.image_of_string(&seed).unwrap(),
            v.image_of_string(&seed).unwrap()
        );
    }
    let c = circuit_depth_witness(&basic_u4()).unwrap();
    assert!(c.depth() <= 8);
}
