use std::path::Path;
use std::process::{Command, Output};

use power_forge::format::Artifact;
use power_forge_core::{ConstructionArtifacts, IntPoly, SelectionPolicy};
use serde_json::Value;

fn power_forge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_power-forge"))
        .args(args)
        .env_remove("POWER_FORGE_WORKERS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_then_verify_passes() {
    let dir = tempfile::tempdir().unwrap();
    let art = dir.path().join("a.json");
    let out = power_forge(&["construct", "--set", "9/25", "--out", path_str(&art)]);
    assert_eq!(out.status.code(), Some(0));
    let summary = String::from_utf8(out.stdout).unwrap();
    assert!(summary.contains("k = 4"), "{summary}");
    assert!(summary.contains("degree = 9"), "{summary}");

    let out = power_forge(&["verify", "--artifact", path_str(&art), "--height", "40", "--workers", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["verdict"], "PASS");
    assert_eq!(report["hits"][0]["x"], "9/25");
    assert_eq!(report["hits"].as_array().unwrap().len(), 1);
}

#[test]
fn construct_json_goes_to_stdout_without_out() {
    let out = power_forge(&["construct", "--set", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["variant"], "rational");
    assert_eq!(doc["pipeline"]["k"], 4);
    assert_eq!(doc["pipeline"]["s"], 7);
    assert!(String::from_utf8(out.stderr).unwrap().contains("kappa = 3"));
}

#[test]
fn empty_set_gives_constant_two() {
    let out = power_forge(&["construct", "--set", ""]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["f_s"], serde_json::json!(["2"]));
    assert!(doc["pipeline"].is_null());
}

#[test]
fn invalid_element_is_a_validation_error() {
    let out = power_forge(&["construct", "--set", "4,3"]);
    assert_eq!(out.status.code(), Some(2));
    let err = json(&out);
    assert_eq!(err["error"]["kind"], "validation");
    assert_eq!(err["error"]["element"], "3");

    let out = power_forge(&["construct", "--set", "4,4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = power_forge(&["construct", "--integer", "--set", "9/25"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn set_file_matches_set_flag() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("s.txt");
    std::fs::write(&file, "9/25\n-8/27\n").unwrap();
    let a = power_forge(&["construct", "--set-file", path_str(&file)]);
    let b = power_forge(&["construct", "--set", "9/25,-8/27"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn adversarial_artifact_fails() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x2.json");
    let art = Artifact::Rational(ConstructionArtifacts {
        elements: Vec::new(),
        policy: SelectionPolicy::default(),
        f_s: IntPoly::x().mul(&IntPoly::x()),
        pipeline: None,
    });
    std::fs::write(&path, art.to_json()).unwrap();
    let out = power_forge(&["verify", "--artifact", path_str(&path), "--bound", "10"]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    assert_eq!(report["verdict"], "FAIL");
    assert!(!report["extras"].as_array().unwrap().is_empty());
}

#[test]
fn malformed_artifact_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"variant\": \"rational\"}").unwrap();
    let out = power_forge(&["verify", "--artifact", path_str(&path), "--height", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let missing = dir.path().join("absent.json");
    let out = power_forge(&["verify", "--artifact", path_str(&missing), "--height", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn integer_artifact_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let art = dir.path().join("i.json");
    let out = power_forge(&["construct", "--integer", "--set", "4,8,36", "--out", path_str(&art)]);
    assert_eq!(out.status.code(), Some(0));
    let out = power_forge(&["verify", "--artifact", path_str(&art), "--bound", "10000", "--progress"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let mut values: Vec<_> = report["hits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|h| h["value"].as_str().unwrap().to_string())
        .collect();
    values.sort();
    values.dedup();
    assert_eq!(values, ["36", "4", "8"]);
    assert!(!out.stderr.is_empty());
}

#[test]
fn artifact_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.json");
    power_forge(&["construct", "--set", "9/25,4/49", "--out", path_str(&path)]);
    let text = std::fs::read_to_string(&path).unwrap();
    let art = Artifact::from_json(&text).unwrap();
    assert_eq!(art.to_json().trim_end(), text.trim_end());
}

#[test]
fn trace_reports_quantities() {
    let out = power_forge(&["trace", "--set", "9/25", "--x", "1/2"]);
    assert_eq!(out.status.code(), Some(0));
    let rec = json(&out);
    assert_eq!(rec["A"], "7");
    assert_eq!(rec["power_sum"], "2417");
    let out = power_forge(&["trace", "--set", "4", "--x", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["power_sum"], "2");
    let out = power_forge(&["trace", "--set", "4", "--x", "1/2", "--k", "6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracles_match_stated_sets() {
    for args in [
        &["oracle", "lebesgue", "--x", "200", "--n", "10", "--expect", "paper"][..],
        &["oracle", "catalan", "--base", "30", "--exp", "8", "--expect", "paper"],
        &["oracle", "fermat", "--variant", "cn", "--bound", "20", "--n", "5", "--expect", "paper"],
        &["oracle", "fermat", "--variant", "2cn", "--bound", "20", "--n", "5", "--expect", "paper"],
        &["oracle", "fermat", "--variant", "24n", "--bound", "20", "--n", "6", "--expect", "paper"],
    ] {
        let out = power_forge(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(json(&out)["expect"]["matches"], true, "{args:?}");
    }
}

#[test]
fn recurrence_accepts_negative_parameters() {
    let out = power_forge(&["oracle", "recurrence", "--a", "1", "--b", "-1", "--alpha", "3", "--beta", "2", "--t-max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert!(doc["resubstitution_ok"].as_bool().unwrap());
    let out = power_forge(&["oracle", "gamma", "--gamma", "20", "--t-max", "10", "--expect", "paper"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn power_query() {
    let out = power_forge(&["power", "64/729"]);
    assert_eq!(json(&out)["decomposition"], serde_json::json!({"base": "2/3", "exponent": 6}));
    let out = power_forge(&["power", "-27", "--integer"]);
    assert_eq!(json(&out)["decomposition"]["base"], "-3");
    let out = power_forge(&["power", "12"]);
    assert!(json(&out)["decomposition"].is_null());
    let out = power_forge(&["power", "1/2", "--integer"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(power_forge(&["verify"]).status.code(), Some(2));
    assert_eq!(power_forge(&["bogus"]).status.code(), Some(2));
    assert_eq!(power_forge(&["--help"]).status.code(), Some(0));
}

#[test]
fn run_is_callable_in_process() {
    assert_eq!(power_forge::cli::run(["power-forge", "power", "8", "--out", "/dev/null"]), 0);
}
