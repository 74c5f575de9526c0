//! Named numeric checks with JSON-serializable results.

use serde::Serialize;
use serde_json::{json, Value};

use crate::chain::library::{
    basic_u1, cluster, kramers_wannier, named_tableaux, nl2_example, nl3_example, nl4_example,
    u_star,
};
use crate::chain::{ChainImage, Transform};
use crate::classifier::{census_c2, circuit_depth_witness};
use crate::clifford::CliffordTableau;
use crate::hamiltonian::models::xxz;
use crate::hamiltonian::Params;
use crate::pauli::{Letter, PauliString};

use super::{
    conjugated_transfer_commutation, dense_layered, dense_staircase, mpo_contract, spectrum_check,
    synthesis_residual, transfer_matrix_commutation, ybe_residual, DenseError, DenseOperator,
};

pub const CHECK_NAMES: [&str; 8] = [
    "synthesis",
    "images",
    "mpo",
    "ustar_layers",
    "spectrum",
    "ybe",
    "transfer",
    "transfer_conjugated",
];

pub const YBE_TRIPLES: [(f64, f64, f64); 3] =
    [(0.3, 0.7, 0.5), (1.1, -0.4, 0.23), (0.61, 0.17, 1.3)];

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check: String,
    #[serde(rename = "L")]
    pub sites: usize,
    pub params: Value,
    pub residual: f64,
    pub pass: bool,
}

impl CheckResult {
    fn new(check: &str, sites: usize, params: Value, residual: f64, tol: f64) -> Self {
        CheckResult {
            check: check.to_string(),
            sites,
            params,
            residual,
            pass: residual.is_finite() && residual < tol,
        }
    }
}

/// Dense conjugation of `letter` on `site` by the open staircase against the
/// symbolic bulk image (resolved at the right edge when non-local).
pub fn image_residual(t: &CliffordTableau, sites: usize, site: usize) -> Result<f64, DenseError> {
    let u = dense_staircase::<f64>(t, sites)?;
    let tr = Transform::staircase(t.clone());
    let mut worst = 0.0f64;
    for letter in Letter::NONTRIVIAL {
        let image = tr
            .image_of_site_pauli(letter)
            .map_err(|e| DenseError::Unsupported(e.to_string()))?;
        let expected = match image {
            ChainImage::Local(p) => p,
            ChainImage::NonLocal(n) => n
                .resolve((sites - 1 - site) as i64)
                .ok_or_else(|| DenseError::Unsupported(format!("chain too short for {t}")))?,
        }
        .translate(site as i64);
        let seed = DenseOperator::pauli(&PauliString::single(site as i64, letter), sites)?;
        let lhs = u.conjugate(&seed);
        worst = worst.max(lhs.max_abs_diff(&DenseOperator::pauli(&expected, sites)?));
    }
    Ok(worst)
}

fn k2_test_set() -> Vec<(&'static str, CliffordTableau)> {
    vec![
        ("identity", CliffordTableau::identity(2)),
        ("cluster", cluster()),
        ("KW", kramers_wannier()),
        ("U1", basic_u1()),
        ("USTAR", u_star()),
        ("NL2", nl2_example()),
        ("NL3", nl3_example()),
        ("NL4", nl4_example()),
    ]
}

fn failed(check: &str, sites: usize, params: Value, e: impl ToString) -> CheckResult {
    let mut params = params;
    params["error"] = Value::String(e.to_string());
    CheckResult {
        check: check.into(),
        sites,
        params,
        residual: f64::INFINITY,
        pass: false,
    }
}

fn run_one(name: &str, sites: Option<usize>) -> Vec<CheckResult> {
    match name {
        "synthesis" => named_tableaux()
            .into_iter()
            .filter(|(_, t)| t.k() <= 3)
            .map(|(n, t)| match synthesis_residual::<f64>(&t) {
                Ok(r) => CheckResult::new(name, t.k(), json!({ "tableau": n }), r, 1e-12),
                Err(e) => failed(name, t.k(), json!({ "tableau": n }), e),
            })
            .collect(),
        "images" => {
            let l = sites.unwrap_or(8);
            let census = match census_c2() {
                Ok(c) => c,
                Err(e) => return vec![failed(name, l, json!({}), e)],
            };
            census
                .representatives(1)
                .into_iter()
                .flat_map(|(tag, v)| v.into_iter().map(move |e| (tag, e.tableau.clone())))
                .map(|(tag, t)| {
                    let params =
                        json!({ "class": tag.to_string(), "tableau": t.to_string(), "site": 3 });
                    match image_residual(&t, l, 3) {
                        Ok(r) => CheckResult::new(name, l, params, r, 1e-12),
                        Err(e) => failed(name, l, params, e),
                    }
                })
                .collect()
        }
        "mpo" => {
            let lengths = sites.map_or(vec![4, 6, 8], |l| vec![l]);
            let mut out = Vec::new();
            for (n, t) in k2_test_set() {
                for &l in &lengths {
                    let params = json!({ "tableau": n });
                    let r = dense_staircase::<f64>(&t, l)
                        .and_then(|a| mpo_contract::<f64>(&t, l).map(|b| a.max_abs_diff(&b)));
                    out.push(match r {
                        Ok(r) => CheckResult::new(name, l, params, r, 1e-12),
                        Err(e) => failed(name, l, params, e),
                    });
                }
            }
            out
        }
        "ustar_layers" => {
            let l = sites.unwrap_or(6);
            let c = circuit_depth_witness(&u_star()).expect("U* commutes with its translates");
            let r = dense_layered::<f64>(&c, l)
                .and_then(|a| dense_staircase::<f64>(&u_star(), l).map(|b| a.max_abs_diff(&b)));
            let params = json!({ "depth": c.depth() });
            vec![match r {
                Ok(r) => CheckResult::new(name, l, params, r, 1e-12),
                Err(e) => failed(name, l, params, e),
            }]
        }
        "spectrum" => {
            let l = sites.unwrap_or(8);
            let params = json!({ "model": "xxz", "transform": "U1", "Delta": 0.5 });
            match spectrum_check::<f64>(
                &xxz(),
                &Transform::staircase(basic_u1()),
                l,
                &Params::xxz(0.5, 0.0),
            ) {
                Ok(r) => {
                    let mut params = params;
                    params["operator_deviation"] = json!(r.operator_deviation);
                    vec![CheckResult::new(
                        name,
                        l,
                        params,
                        r.spectral_deviation,
                        1e-10,
                    )]
                }
                Err(e) => vec![failed(name, l, params, e)],
            }
        }
        "ybe" => YBE_TRIPLES
            .iter()
            .map(|&(lambda, mu, eta)| {
                let params = json!({ "lambda": lambda, "mu": mu, "eta": eta });
                CheckResult::new(name, 3, params, ybe_residual(lambda, mu, eta), 1e-12)
            })
            .collect(),
        "transfer" | "transfer_conjugated" => {
            let l = sites.unwrap_or(6);
            let (eta, lambda, mu) = (0.35, 0.42, -0.77);
            let params = json!({ "eta": eta, "lambda": lambda, "mu": mu });
            let r = if name == "transfer" {
                transfer_matrix_commutation(eta, l, lambda, mu)
            } else {
                conjugated_transfer_commutation(eta, l, lambda, mu)
            };
            vec![match r {
                Ok(r) => CheckResult::new(name, l, params, r, 1e-10),
                Err(e) => failed(name, l, params, e),
            }]
        }
        other => vec![failed(
            other,
            0,
            json!({}),
            format!("unknown check; known: {}", CHECK_NAMES.join(", ")),
        )],
    }
}

/// Runs one named check, or all of them when `check` is `None`. `sites`
/// overrides each check's default chain length.
pub fn run_checks(check: Option<&str>, sites: Option<usize>) -> Vec<CheckResult> {
    match check {
        Some(name) => run_one(name, sites),
        None => CHECK_NAMES.iter().flat_map(|n| run_one(n, sites)).collect(),
    }
}
