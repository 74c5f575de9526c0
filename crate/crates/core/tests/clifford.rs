//! Clifford tableaux: group structure and conjugation.

use std::sync::OnceLock;

use cliffchain::chain::library::{basic_u2, basic_u4, u_star};
use cliffchain::clifford::CliffordTableau;
use cliffchain::pauli::{Letter, PauliString, Phase};
use proptest::prelude::*;

fn all_c2() -> &'static [CliffordTableau] {
    static ALL: OnceLock<Vec<CliffordTableau>> = OnceLock::new();
    ALL.get_or_init(|| CliffordTableau::enumerate(2).unwrap())
}

/// `2^(k^2 + 2k) prod_{j=1..k} (4^j - 1)`.
fn order_formula(k: u32) -> u64 {
    (1..=k).fold(1u64 << (k * k + 2 * k), |acc, j| acc * (4u64.pow(j) - 1))
}

fn paulis(k: usize) -> Vec<PauliString> {
    (1..(1usize << (2 * k)))
        .map(|c| {
            let letters = (0..k)
                .map(|i| Letter::from_code(((c >> (2 * i)) & 3) as u8))
                .collect();
            PauliString::from_letters(1, letters, Phase::ONE)
        })
        .collect()
}

#[test]
fn group_orders() {
    let start = std::time::Instant::now();
    assert_eq!(CliffordTableau::enumerate(1).unwrap().len(), 24);
    assert_eq!(all_c2().len(), 11520);
    assert_eq!(order_formula(1), 24);
    assert_eq!(order_formula(2), 11520);
    assert!(start.elapsed().as_secs() < 10);
}

#[test]
fn enumeration_has_no_duplicates() {
    let set: std::collections::HashSet<_> = all_c2().iter().collect();
    assert_eq!(set.len(), 11520);
}

#[test]
fn commuting_factor_commutes_with_its_translate_on_three_sites() {
    let u = u_star();
    for p in paulis(3) {
        let ab = u.conjugate_at(&u.conjugate_at(&p, 1), 2);
        let ba = u.conjugate_at(&u.conjugate_at(&p, 2), 1);
        assert_eq!(ab, ba, "{p}");
    }
}

#[test]
fn three_site_rows_validate() {
    for t in [basic_u2(), basic_u4()] {
        t.validate().unwrap();
        let inv = t.inverse();
        assert!(CliffordTableau::compose(&t, &inv).unwrap().is_identity());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn conjugation_preserves_commutation(idx in 0usize..11520) {
        let t = &all_c2()[idx];
        let ps = paulis(2);
        for a in &ps {
            for b in &ps {
                let (ia, ib) = (t.conjugate(a).unwrap(), t.conjugate(b).unwrap());
                prop_assert_eq!(a.commutes(b), ia.commutes(&ib));
            }
        }
    }

    #[test]
    fn composition_is_a_group_action(i in 0usize..11520, j in 0usize..11520) {
        let (a, b) = (&all_c2()[i], &all_c2()[j]);
        let ab = CliffordTableau::compose(a, b).unwrap();
        for p in paulis(2) {
            prop_assert_eq!(ab.conjugate(&p).unwrap(), a.conjugate(&b.conjugate(&p).unwrap()).unwrap());
        }
    }

    #[test]
    fn inverse_undoes(i in 0usize..11520) {
        let t = &all_c2()[i];
        prop_assert!(CliffordTableau::compose(&t.inverse(), t).unwrap().is_identity());
        prop_assert!(CliffordTableau::compose(t, &t.inverse()).unwrap().is_identity());
    }

    #[test]
    fn json_round_trip(i in 0usize..11520) {
        let t = &all_c2()[i];
        prop_assert_eq!(&CliffordTableau::from_json(&t.to_json()).unwrap(), t);
    }
}
