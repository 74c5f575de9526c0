//! End-to-end runs of the command-line front end.

use std::process::Command;

use clap::Parser;
use cliffchain::cli::{parse_transform, run, Cli, CliError};
use cliffchain::hamiltonian::models::{h1, hpp};
use cliffchain::hamiltonian::{Symbol, TIHamiltonian};
use num_rational::Rational64;

fn run_args(args: &[&str]) -> (Result<i32, CliError>, String) {
    let cli =
        Cli::try_parse_from(std::iter::once("cliffchain").chain(args.iter().copied())).unwrap();
    let mut out = Vec::new();
    let r = run(cli, &mut out);
    (r, String::from_utf8(out).unwrap())
}

fn golden() -> String {
    format!("{}/tests/golden/census_c2.json", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn transform_xxz_by_u1_gives_h1() {
    let (r, text) = run_args(&["transform", "xxz", "--by", "U1", "--delta", "0.5"]);
    assert_eq!(r.unwrap(), 0);
    let got: TIHamiltonian = serde_json::from_str(&text).unwrap();
    assert!(
        got.equivalent(&h1().substitute(Symbol::Delta, Rational64::new(1, 2))),
        "{text}"
    );
}

#[test]
fn transform_with_field_uses_field_chain() {
    let (r, text) = run_args(&["transform", "xxz", "--by", "KW", "--h", "0.3"]);
    assert_eq!(r.unwrap(), 0);
    let got: TIHamiltonian = serde_json::from_str(&text).unwrap();
    let want = hpp().substitute(Symbol::Field, Rational64::new(3, 10));
    assert!(got.equivalent(&want), "{text}");
    assert!(text.contains("\"+XX@-1\""), "{text}");
}

#[test]
fn composition_applies_rightmost_first() {
    let (_, a) = run_args(&["transform", "xxz", "--by", "U4*U2"]);
    let (_, b) = run_args(&["transform", "h0", "--by", "ID"]);
    let a: TIHamiltonian = serde_json::from_str(&a).unwrap();
    let b: TIHamiltonian = serde_json::from_str(&b).unwrap();
    assert!(a.equivalent(&b));
    assert!(
        matches!(parse_transform("U4*U2").unwrap(), cliffchain::chain::Transform::Compose(v) if v.len() == 2)
    );
}

#[test]
fn inverse_round_trip_through_cli() {
    let (_, text) = run_args(&["transform", "xxz", "--by", "inv(U3)*U3"]);
    let got: TIHamiltonian = serde_json::from_str(&text).unwrap();
    assert!(got.equivalent(&cliffchain::hamiltonian::models::xxz()));
}

#[test]
fn classify_identity_file() {
    let dir = std::env::temp_dir().join(format!("cliffchain-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("identity.json");
    std::fs::write(
        &path,
        cliffchain::clifford::CliffordTableau::identity(2).to_json(),
    )
    .unwrap();
    let (r, text) = run_args(&["classify", path.to_str().unwrap()]);
    assert_eq!(r.unwrap(), 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["class"], "L1");
    assert_eq!(v["params"]["P"], "+X");
    assert_eq!(v["params"]["Q"], "+Z");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn unknown_names_are_listed() {
    let (r, _) = run_args(&["transform", "xx", "--by", "U1"]);
    let msg = r.unwrap_err().to_string();
    assert!(msg.contains("did you mean") && msg.contains("xxz"), "{msg}");
    let (r, _) = run_args(&["transform", "xxz", "--by", "U9"]);
    assert!(matches!(r, Err(CliError::UnknownTransform { .. })));
}

#[test]
fn string_transform_of_xxz_is_an_error() {
    let (r, _) = run_args(&["transform", "xxz", "--by", "NL2"]);
    assert!(r.unwrap_err().to_string().contains("non-local"));
}

#[test]
fn census_matches_golden_file() {
    let (r, text) = run_args(&["census", "--golden", &golden()]);
    assert_eq!(r.unwrap(), 0, "{text}");
}

#[test]
fn census_drift_exits_nonzero() {
    let dir = std::env::temp_dir().join(format!("cliffchain-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, r#"{"total": 11520, "counts": {"L1": 1}}"#).unwrap();
    let (r, _) = run_args(&["census", "--golden", path.to_str().unwrap()]);
    assert_eq!(r.unwrap(), 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_reports_json_lines() {
    let (r, text) = run_args(&["verify", "--check", "ybe"]);
    assert_eq!(r.unwrap(), 0);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        for key in ["check", "L", "params", "residual", "pass"] {
            assert!(v.get(key).is_some(), "{line}");
        }
    }
    let (r, _) = run_args(&["verify", "--check", "nope"]);
    assert!(matches!(r, Err(CliError::UnknownCheck { .. })));
}

#[test]
fn graph_has_edges() {
    let (r, text) = run_args(&["graph", "xxz", "--window", "2"]);
    assert_eq!(r.unwrap(), 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 15);
    assert!(!v["edges"].as_array().unwrap().is_empty());
}

#[test]
fn binary_output_is_deterministic() {
    let bin = env!("CARGO_BIN_EXE_cliffchain");
    let once = || {
        Command::new(bin)
            .args(["enumerate5", "--format", "table"])
            .env("CLIFFCHAIN_THREADS", "2")
            .output()
            .unwrap()
    };
    let (a, b) = (once(), once());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let bad = Command::new(bin)
        .args(["transform", "nope", "--by", "U1"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
