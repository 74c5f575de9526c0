//! Pauli string algebra against an explicit Kronecker-product oracle.

use cliffchain::pauli::{Letter, PauliString, Phase};
use num_complex::Complex64 as C;
use proptest::prelude::*;

type Mat = Vec<Vec<C>>;

fn letter_matrix(l: Letter) -> Mat {
    let (o, z, i) = (C::new(1.0, 0.0), C::new(0.0, 0.0), C::new(0.0, 1.0));
    match l {
        Letter::I => vec![vec![o, z], vec![z, o]],
        Letter::X => vec![vec![z, o], vec![o, z]],
        Letter::Y => vec![vec![z, -i], vec![i, z]],
        Letter::Z => vec![vec![o, z], vec![z, -o]],
    }
}

fn kron(a: &Mat, b: &Mat) -> Mat {
    let (n, m) = (a.len(), b.len());
    let mut out = vec![vec![C::new(0.0, 0.0); n * m]; n * m];
    for r in 0..n * m {
        for c in 0..n * m {
            out[r][c] = a[r / m][c / m] * b[r % m][c % m];
        }
    }
    out
}

fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| (0..n).map(|k| a[r][k] * b[k][c]).sum())
                .collect()
        })
        .collect()
}

fn phase_value(p: Phase) -> C {
    [
        C::new(1.0, 0.0),
        C::new(0.0, 1.0),
        C::new(-1.0, 0.0),
        C::new(0.0, -1.0),
    ][p.exponent() as usize % 4]
}

/// Matrix of `p` on sites `0..sites`.
fn oracle(p: &PauliString, sites: i64) -> Mat {
    let mut m = vec![vec![phase_value(p.phase())]];
    for s in 0..sites {
        m = kron(&m, &letter_matrix(p.letter_at(s)));
    }
    m
}

fn close(a: &Mat, b: &Mat) -> bool {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .all(|(x, y)| (x - y).norm() < 1e-12)
}

fn string(sites: usize) -> impl Strategy<Value = PauliString> {
    (proptest::collection::vec(0u8..4, sites), 0u8..4).prop_map(|(codes, ph)| {
        PauliString::from_letters(
            0,
            codes.into_iter().map(Letter::from_code).collect(),
            Phase::from_exponent(ph as i64),
        )
    })
}

#[test]
fn two_site_products_exhaustive() {
    let all: Vec<PauliString> = (0..16u8)
        .map(|c| {
            PauliString::from_letters(
                0,
                vec![Letter::from_code(c & 3), Letter::from_code(c >> 2)],
                Phase::ONE,
            )
        })
        .collect();
    for a in &all {
        for b in &all {
            let lhs = oracle(&(a * b), 2);
            let rhs = matmul(&oracle(a, 2), &oracle(b, 2));
            assert!(close(&lhs, &rhs), "{a} {b}");
        }
    }
}

#[test]
fn single_site_letter_products() {
    // ZX = iY, XZ = -iY
    let zx = &PauliString::single(0, Letter::Z) * &PauliString::single(0, Letter::X);
    assert_eq!(zx, PauliString::single(0, Letter::Y).times_phase(Phase::I));
    let xz = &PauliString::single(0, Letter::X) * &PauliString::single(0, Letter::Z);
    assert_eq!(
        xz,
        PauliString::single(0, Letter::Y).times_phase(Phase::MINUS_I)
    );
}

proptest! {
    #[test]
    fn four_site_products_match_oracle(a in string(4), b in string(4)) {
        let lhs = oracle(&(&a * &b), 4);
        let rhs = matmul(&oracle(&a, 4), &oracle(&b, 4));
        prop_assert!(close(&lhs, &rhs));
    }

    #[test]
    fn commute_or_anticommute(a in string(4), b in string(4)) {
        let ab = &a * &b;
        let ba = &b * &a;
        if a.commutes(&b) {
            prop_assert_eq!(ab, ba);
        } else {
            prop_assert_eq!(ab, -ba);
        }
    }

    #[test]
    fn text_round_trip(a in string(5), shift in -7i64..7) {
        let p = a.translate(shift);
        let back: PauliString = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn adjoint_is_inverse(a in string(4)) {
        prop_assert!((&a * &a.adjoint()).is_identity());
        prop_assert_eq!((&a * &a.adjoint()).phase(), Phase::ONE);
    }

    #[test]
    fn translation_is_a_homomorphism(a in string(3), b in string(3), j in -5i64..5) {
        prop_assert_eq!((&a * &b).translate(j), &a.translate(j) * &b.translate(j));
    }
}
