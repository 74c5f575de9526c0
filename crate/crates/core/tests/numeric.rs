//! Dense cross-checks of the symbolic layer, in both precisions.

use std::sync::OnceLock;

use cliffchain::chain::library::*;
use cliffchain::chain::{ClassTag, Transform};
use cliffchain::classifier::{census_c2, circuit_depth_witness};
use cliffchain::clifford::CliffordTableau;
use cliffchain::hamiltonian::models::{h0, xxz};
use cliffchain::hamiltonian::{transform_terms, Params};
use cliffchain::numeric::*;
use cliffchain::pauli::{ps, Letter, PauliString, Phase};
use cliffchain::{DenseOperator32, DenseOperator64};
use proptest::prelude::*;

fn all_c2() -> &'static [CliffordTableau] {
    static ALL: OnceLock<Vec<CliffordTableau>> = OnceLock::new();
    ALL.get_or_init(|| CliffordTableau::enumerate(2).unwrap())
}

#[test]
fn synthesis_exhaustive_over_two_site_group() {
    for t in all_c2() {
        let r = synthesis_residual::<f64>(t).unwrap();
        assert!(r < 1e-12, "{t}: {r}");
    }
}

#[test]
fn synthesis_of_three_site_rows() {
    for t in [basic_u2(), basic_u3(), basic_u4()] {
        assert!(synthesis_residual::<f64>(&t).unwrap() < 1e-12);
        assert!(synthesis_residual::<f32>(&t).unwrap() < 1e-5);
    }
}

#[test]
fn single_precision_staircase() {
    let u: DenseOperator32 = dense_staircase(&basic_u1(), 6).unwrap();
    assert!(u.unitarity_defect() < 1e-5);
    let seed = DenseOperator32::pauli(&PauliString::single(3, Letter::X), 6).unwrap();
    let want = DenseOperator32::pauli(&ps("ZYZ@2"), 6).unwrap();
    assert!(u.conjugate(&seed).max_abs_diff(&want) < 1e-5);
}

#[test]
fn decoration_row_at_eight_sites() {
    let u: DenseOperator64 = dense_staircase(&basic_u1(), 8).unwrap();
    assert!(u.unitarity_defect() < 1e-12);
    let seed = DenseOperator64::pauli(&PauliString::single(4, Letter::X), 8).unwrap();
    let want = DenseOperator64::pauli(&ps("ZYZ@3"), 8).unwrap();
    assert!(u.conjugate(&seed).max_abs_diff(&want) < 1e-12);
}

#[test]
fn kramers_wannier_string_ends_on_a_single_site() {
    let l = 8;
    let u: DenseOperator64 = dense_staircase(&kramers_wannier(), l).unwrap();
    let got = u.conjugate(&DenseOperator64::pauli(&PauliString::single(2, Letter::X), l).unwrap());
    let found = Letter::NONTRIVIAL.iter().any(|&t| {
        let mut sites: Vec<(i64, Letter)> = (2..l as i64 - 1).map(|n| (n, Letter::Z)).collect();
        sites.push((l as i64 - 1, t));
        let p = PauliString::from_sites(sites);
        [Phase::ONE, Phase::MINUS_ONE].iter().any(|&s| {
            let want = DenseOperator64::pauli(&p.clone().with_phase(s), l).unwrap();
            got.max_abs_diff(&want) < 1e-12
        })
    });
    assert!(found);
}

#[test]
fn class_representatives_match_dense_conjugation() {
    let census = census_c2().unwrap();
    let reps = census.representatives(3);
    assert_eq!(reps.len(), 7);
    for (tag, entries) in reps {
        for e in entries {
            let r = image_residual(&e.tableau, 8, 3).unwrap();
            assert!(r < 1e-12, "{tag} {}: {r}", e.tableau);
        }
    }
    assert!(census.members(ClassTag::Unclassified).next().is_none());
}

#[test]
fn mpo_equals_staircase_product() {
    let set = [
        CliffordTableau::identity(2),
        cluster(),
        kramers_wannier(),
        basic_u1(),
        u_star(),
        field_decoration(),
        nl2_example(),
        nl3_example(),
        nl4_example(),
    ];
    for t in &set {
        for l in [4, 6, 8] {
            let a = dense_staircase::<f64>(t, l).unwrap();
            let b = mpo_contract::<f64>(t, l).unwrap();
            assert!(a.max_abs_diff(&b) < 1e-12, "{t} L={l}");
        }
    }
    let (_, tensors, _) = staircase_tensors::<f64>(&cluster(), 6).unwrap();
    assert!(tensors[..5].iter().all(|m| m.chi_l == 4 && m.chi_r == 4));
}

#[test]
fn commuting_layers_reorder_to_depth_two() {
    let c = circuit_depth_witness(&u_star()).unwrap();
    assert_eq!(c.depth(), 2);
    let a = dense_layered::<f64>(&c, 6).unwrap();
    let b = dense_staircase::<f64>(&u_star(), 6).unwrap();
    assert!(a.max_abs_diff(&b) < 1e-12);
}

#[test]
fn spectrum_preserved_under_decoration() {
    let r = spectrum_check::<f64>(
        &xxz(),
        &Transform::staircase(basic_u1()),
        8,
        &Params::xxz(0.5, 0.0),
    )
    .unwrap();
    assert!(r.spectral_deviation < 1e-10, "{r:?}");
    assert!(r.operator_deviation < 1e-12, "{r:?}");
}

#[test]
fn spectrum_preserved_under_composite_at_ten_sites() {
    let r = spectrum_check::<f64>(&xxz(), &u4_after_u2(), 10, &Params::xxz(0.5, 0.0)).unwrap();
    assert!(r.spectral_deviation < 1e-10, "{r:?}");
    assert!(r.operator_deviation < 1e-12, "{r:?}");
}

#[test]
fn composite_open_chain_bulk_terms_are_eight_site_model_terms() {
    let l = 14i64;
    let t = u4_after_u2();
    let bulk = transform_terms(&xxz(), &t).unwrap();
    let want = h0().normalized_terms();
    let mut checked = 0;
    for (src, img) in xxz().terms.iter().zip(&bulk) {
        let (lo, hi) = src.op.window().unwrap();
        for n in -lo..(l - hi) {
            let open = t.conjugate_open(&src.op.translate(n), 0, l - 1);
            let expected = img.op.translate(n);
            let (elo, ehi) = expected.window().unwrap();
            if elo >= 1 && ehi <= l - 4 {
                let signed = if open.phase() == Phase::ONE {
                    img.coupling.clone()
                } else {
                    -img.coupling.clone()
                };
                assert_eq!(open.unsigned(), expected, "n={n}");
                assert_eq!(want[&open.unsigned().translate(-elo)], signed);
                checked += 1;
            }
        }
    }
    assert!(checked >= 6);
}

#[test]
fn integrable_checks_in_both_precisions() {
    for (l, m, e) in YBE_TRIPLES {
        assert!(ybe_residual(l, m, e) < 1e-12);
        assert!(ybe_residual(l as f32, m as f32, e as f32) < 1e-5);
    }
    assert!(transfer_matrix_commutation(0.35f64, 6, 0.42, -0.77).unwrap() < 1e-10);
    assert!(conjugated_transfer_commutation(0.35f64, 6, 0.42, -0.77).unwrap() < 1e-10);
    assert!(transfer_matrix_commutation(0.35f32, 4, 0.42, -0.77).unwrap() < 1e-5);
}

#[test]
fn delta_from_eta() {
    // Delta = cos(2 eta); eta = pi/2 gives Delta = -1 and c = sin(2 eta) = 0
    let eta = std::f64::consts::FRAC_PI_2;
    assert!(((2.0 * eta).cos() + 1.0).abs() < 1e-15);
    let r = xxz_rmatrix(0.3f64, eta);
    assert!(r.get(1, 2).norm() < 1e-15);
    let eta = 0.5f64.acos() / 2.0;
    assert!(((2.0 * eta).cos() - 0.5).abs() < 1e-15);
}

#[test]
fn too_long_chain_rejected() {
    assert!(matches!(
        dense_staircase::<f64>(&basic_u1(), 13),
        Err(DenseError::TooLarge(13))
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_two_site_mpo_matches(idx in 0usize..11520, l in 3usize..7) {
        let t = &all_c2()[idx];
        let a = dense_staircase::<f64>(t, l).unwrap();
        let b = mpo_contract::<f64>(t, l).unwrap();
        prop_assert!(a.max_abs_diff(&b) < 1e-12);
        prop_assert!(a.unitarity_defect() < 1e-12);
    }

    #[test]
    fn random_two_site_images_match(idx in 0usize..11520) {
        let t = &all_c2()[idx];
        prop_assert!(image_residual(t, 8, 3).unwrap() < 1e-12);
    }
}
