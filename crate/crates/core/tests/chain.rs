//! Bulk images of staircase transforms.

use cliffchain::chain::library::*;
use cliffchain::chain::{classify, letter_images, ChainImage, ClassTag, Transform};
use cliffchain::classifier::census_c2;
use cliffchain::clifford::CliffordTableau;
use cliffchain::pauli::{ps, Letter, PauliString};
use proptest::prelude::*;
use std::sync::OnceLock;

fn image(t: &CliffordTableau, l: Letter) -> ChainImage {
    Transform::staircase(t.clone())
        .image_of_site_pauli(l)
        .unwrap()
}

fn all_c2() -> &'static [CliffordTableau] {
    static ALL: OnceLock<Vec<CliffordTableau>> = OnceLock::new();
    ALL.get_or_init(|| CliffordTableau::enumerate(2).unwrap())
}

#[test]
fn basic_clifford_rows_give_listed_chain_images() {
    let rows = [
        (basic_u1(), "+ZYZ@-1", "+Z@0"),
        (basic_u2(), "-ZZYZZ@-2", "+Z@0"),
        (basic_u3(), "+ZIXIZ@-2", "+Z@0"),
        (basic_u4(), "-ZYYYZ@-2", "-ZXZ@-1"),
    ];
    for (t, x, z) in rows {
        assert_eq!(image(&t, Letter::X), ChainImage::Local(ps(x)), "{t}");
        assert_eq!(image(&t, Letter::Z), ChainImage::Local(ps(z)), "{t}");
    }
}

#[test]
fn kramers_wannier_pair_images() {
    let t = Transform::staircase(kramers_wannier());
    assert_eq!(
        t.image_of_string(&ps("XX@0")).unwrap(),
        ChainImage::Local(ps("Z@0"))
    );
    let zz = t.image_of_string(&ps("ZZ@0")).unwrap();
    assert_eq!(zz.local().unwrap().translate(1).unsigned(), ps("XIX@0"));
    // the three-site term with a Z in the middle comes from YY
    let yy = t.image_of_string(&ps("YY@0")).unwrap();
    assert_eq!(*yy.local().unwrap(), ps("-XZX@-1"));
}

#[test]
fn kramers_wannier_single_sites() {
    assert!(!image(&kramers_wannier(), Letter::X).is_local());
    assert!(!image(&kramers_wannier(), Letter::Y).is_local());
    assert_eq!(
        image(&kramers_wannier(), Letter::Z),
        ChainImage::Local(ps("XX@-1"))
    );
}

type Exponent = fn(i64) -> i64;
type SignedRow = (fn(i8, i8) -> CliffordTableau, [Exponent; 4]);

fn oscillation_rows() -> Vec<SignedRow> {
    vec![
        (nl2_signed, [|n| n / 2, |n| n / 2 + n, |_| 0, |n| n]),
        (
            nl3_signed,
            [
                |_| 0,
                |n| n / 3 + n,
                |n| n / 3 + 2 * n / 3 + n,
                |n| 2 * n / 3,
            ],
        ),
        (nl4_signed, [|_| 0, |n| n, |n| n, |_| 0]),
    ]
}

#[test]
fn oscillating_signs_match_floor_forms() {
    let signs = [(1, 1), (1, -1), (-1, 1), (-1, -1)];
    for (make, row) in oscillation_rows() {
        for ((sx, sz), f) in signs.iter().zip(row) {
            let t = make(*sx, *sz);
            for l in [Letter::X, Letter::Z] {
                let img = image(&t, l);
                let rule = img.sign_rule();
                assert!(rule.match_exponent(f, 12).is_some(), "{t} {l}: {rule}");
            }
        }
    }
}

#[test]
fn census_is_a_partition_into_seven_classes() {
    let census = census_c2().unwrap();
    assert_eq!(census.entries.len(), 11520);
    for e in &census.entries {
        assert_ne!(e.class.tag, ClassTag::Unclassified, "{}", e.tableau);
    }
    let counts = census.counts();
    assert_eq!(counts.counts.len(), 7);
    assert_eq!(counts.counts.values().sum::<usize>(), 11520);
}

#[test]
fn named_tableaux_land_in_their_classes() {
    for (t, tag) in [
        (kramers_wannier(), ClassTag::NL1),
        (nl2_example(), ClassTag::NL2),
        (nl3_example(), ClassTag::NL3),
        (nl4_example(), ClassTag::NL4),
        (CliffordTableau::identity(2), ClassTag::L1),
        (CliffordTableau::swap(), ClassTag::L2),
        (cluster(), ClassTag::L3),
    ] {
        assert_eq!(classify(&t).unwrap().tag, tag, "{t}");
    }
}

#[test]
fn local_classes_are_exactly_local_images() {
    for e in census_c2().unwrap().entries {
        let all_local = e.images.iter().all(|i| i.is_local());
        assert_eq!(e.class.tag.is_local(), all_local, "{}", e.tableau);
    }
}

#[test]
fn local_images_are_reflection_symmetric() {
    for e in census_c2().unwrap().entries {
        if !e.class.tag.is_local() {
            continue;
        }
        let shift = if e.class.tag == ClassTag::L2 { 1 } else { 0 };
        for img in &e.images {
            let p = img.local().unwrap().translate(shift);
            assert_eq!(p.reflect(0), p, "{}", e.tableau);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn images_are_translation_covariant(idx in 0usize..11520, j in -6i64..6, l in 0usize..3) {
        let t = &all_c2()[idx];
        let letter = Letter::NONTRIVIAL[l];
        let tr = Transform::staircase(t.clone());
        let img = tr.image_of_site_pauli(letter).unwrap();
        let (first, last) = (-30, 30);
        let open = tr.conjugate_open(&PauliString::single(j, letter), first, last);
        let expected = match &img {
            ChainImage::Local(p) => p.translate(j),
            ChainImage::NonLocal(n) => n.resolve(last - j).unwrap().translate(j),
        };
        prop_assert_eq!(open, expected);
    }

    #[test]
    fn letter_images_agree_with_classification(idx in 0usize..11520) {
        let t = &all_c2()[idx];
        let images = letter_images(t).unwrap();
        let c = classify(t).unwrap();
        prop_assert_eq!(c.tag.is_local(), images.iter().all(|i| i.is_local()));
    }
}
