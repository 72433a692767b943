//! Exit-code contract and output determinism of the binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_kummerlab"))
}

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("kummerlab_test_{name}"));
    std::fs::write(&path, contents).expect("temp file writes");
    path
}

#[test]
fn admissible_exit_codes() {
    let out = run(&["admissible", corpus("pinch_plus.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("verdict: true"));

    let out = run(&["admissible", corpus("reject_gaussian.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("val(b2*a4+b6) = 6"), "reason names the valuations: {text}");
}

#[test]
fn missing_file_is_an_input_error() {
    let out = run(&["tate", "definitely_missing.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_inputs_are_input_errors() {
    let bad_json = write_temp("bad.json", "{ this is not json");
    let out = run(&["invariants", bad_json.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let not_squarefree = write_temp(
        "m12.json",
        r#"{"field": {"kind": "quadratic", "m": 12}, "curve": {"a6": [1, 0]}}"#,
    );
    let out = run(&["invariants", not_squarefree.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("squarefree"));

    let cuspidal = write_temp(
        "cusp.json",
        r#"{"field": {"kind": "rational"}, "curve": {}}"#,
    );
    let out = run(&["invariants", cuspidal.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("discriminant"));
}

#[test]
fn rational_a6_only_curve_parses() {
    let simple = write_temp(
        "a6.json",
        r#"{"field": {"kind": "rational"}, "curve": {"a6": 1}}"#,
    );
    let out = run(&["invariants", simple.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("delta: -432"));
}

#[test]
fn perturbed_corpus_fails_the_targeted_check() {
    // replacing a4 = w by a4 = 1+w introduces odd bad primes
    let mutated = write_temp(
        "mutated_pinch.json",
        r#"{"field": {"kind": "quadratic", "m": -3},
            "curve": {"a2": [1, 1], "a4": [1, 1]}}"#,
    );
    let out = run(&["admissible", mutated.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn pair_and_checklist_flow() {
    let plus = corpus("pinch_plus.json");
    let minus = corpus("pinch_minus.json");
    let out = run(&["pair", plus.to_str().unwrap(), minus.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["checklist", plus.to_str().unwrap(), minus.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("tame cubic"), "{text}");
    assert!(text.contains("I0*"), "{text}");
}

#[test]
fn predict_and_lattice() {
    let out = run(&["predict", "--char", "2", "--fiber", "mu2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("rank: 20"));

    let out = run(&["lattice", "--graph", "D4", "--fundamental-cycle"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("z_squared: -2"));

    let out = run(&["lattice", "--trace", "two-d8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("2xA1 + 2xD6"));

    let out = run(&["lattice", "--graph", "E9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn effmodel_output() {
    let out = run(&["effmodel", corpus("pinch_plus.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("fiber_type: mu_2"));
    assert!(text.contains("fixed_points: 4"));
}

#[test]
fn tate_prime_selection() {
    let f = corpus("comalada_65_1.json");
    let out = run(&["tate", f.to_str().unwrap(), "--prime", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("symbol: I0"));
    let out = run(&["tate", f.to_str().unwrap(), "--prime", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_reports_are_byte_identical_across_runs() {
    let args = ["verify-paper", "--filter", "disc", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    // stable top-level keys
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    for key in ["command", "results", "notes", "summary", "pass"] {
        assert!(v.get(key).is_some(), "missing top-level key {key}");
    }
}

#[test]
fn verify_paper_filter() {
    let out = run(&["verify-paper", "--filter", "pinch"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("pinch_plus.invariants"));
    assert!(!text.contains("comalada_28_1.good_everywhere"));
}
