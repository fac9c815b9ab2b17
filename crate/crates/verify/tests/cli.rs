use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn koszul(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_koszul")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = koszul(args);
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), json)
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("koszul-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn checks(report: &Value) -> &Vec<Value> {
    report["checks"].as_array().expect("checks array")
}

#[test]
fn lemma32_cites_each_identity() {
    let (code, r) = report(&["verify", "lemma32", "--d", "2"]);
    assert_eq!(code, 0);
    assert_eq!(r["verdict"], "pass");
    assert_eq!(r["field_p"], 32003);
    for part in ["(i)", "(ii)", "(iii)", "(iv)"] {
        let cite = format!("Lemma 3.2{part}");
        assert!(checks(&r).iter().any(|c| c["cite"] == cite.as_str() && c["status"] == "theorem" && c["pass"] == true));
    }
    let text = String::from_utf8(koszul(&["verify", "lemma32"]).stdout).unwrap();
    assert!(text.contains("\"cite\": \"Lemma 3.2(ii)\""));
}

#[test]
fn prop2_has_one_check_per_grid_cell() {
    let (code, r) = report(&["verify", "prop2", "--grid", "1", "--N", "2"]);
    assert_eq!(code, 0);
    let cells = checks(&r).iter().filter(|c| c["cite"] == "Proposition 2(b)" && c["status"] != "control").count();
    assert_eq!(cells, 4);
    assert!(r["truncation"].as_str().unwrap().contains("not certified"));
}

#[test]
fn explore_reports_evidence_only_outside_hypotheses() {
    let (code, r) = report(&["explore", "--d", "4", "--c", "1", "--e", "1", "--N", "2"]);
    assert_eq!(code, 0);
    let statuses: Vec<&str> = checks(&r).iter().map(|c| c["status"].as_str().unwrap()).collect();
    assert!(statuses.contains(&"evidence"));
    assert!(!statuses.contains(&"theorem"));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["verify", "thm31", "--d", "2", "--c", "1", "--N", "3"];
    let a = koszul(&args).stdout;
    let b = koszul(&args).stdout;
    assert!(!a.is_empty());
    assert_eq!(a, b);
    assert!(!String::from_utf8(a).unwrap().contains("runtime_ms"));
}

#[test]
fn timing_flag_adds_runtime() {
    let (_, r) = report(&["verify", "en-exact", "--timing"]);
    assert!(r["runtime_ms"].is_u64());
}

#[test]
fn out_flag_writes_the_file() {
    let path = scratch("out.json", "");
    let out = koszul(&["verify", "en-exact", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["scenario"], "en-exact");
}

#[test]
fn invalid_parameters_exit_with_two() {
    let out = koszul(&["verify", "thm31", "--c", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("c must be a positive integer"));
    assert_eq!(koszul(&["verify", "thm31", "--c", "-1"]).status.code(), Some(2));
    assert_eq!(koszul(&["verify", "no-such-scenario"]).status.code(), Some(2));
    assert_eq!(koszul(&["verify", "thm31", "--p", "9"]).status.code(), Some(2));
    assert_eq!(koszul(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(koszul(&["--help"]).status.code(), Some(0));
}

#[test]
fn config_errors_carry_file_and_line() {
    let path = scratch("mixed.toml", "[ring]\nvariables = [\"x\", \"y\"]\n[ideal]\nforms = [\"x^2\", \"y^3\"]\n");
    let out = koszul(&["verify", "thm31", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("mixed.toml:4: forms must share degree d"), "{stderr}");
}

#[test]
fn config_p_conflicting_with_flag_is_rejected() {
    let path = scratch("p.toml", "p = 101\n[ring]\nvariables = [\"x1\",\"x2\",\"x3\"]\n[ideal]\nforms = [\"x1^2\",\"x2^2\",\"x3^2\"]\n");
    let out = koszul(&["verify", "thm31", "--config", path.to_str().unwrap(), "--p", "103"]);
    assert_eq!(out.status.code(), Some(2));
    let (code, r) = report(&["verify", "thm31", "--config", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["field_p"], 101);
}

#[test]
fn resolve_job_gives_the_hypersurface_betti_numbers() {
    let path = scratch(
        "resolve.toml",
        "[ring]\nvariables = [\"x\",\"y\",\"z\"]\n[ideal]\ngenerators = [\"x*y - z^2\"]\n[resolve]\nmodule = \"residue\"\nmax_index = 4\nwindow = [6]\n",
    );
    let (code, r) = report(&["resolve", "--config", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let rows = &checks(&r)[0]["computed"];
    assert_eq!(rows, &serde_json::json!([["0^1"], ["1^3"], ["2^4"], ["3^4"], ["4^4"]]));
    assert_eq!(r["params"]["regularity"], 0);
}

#[test]
fn gb_job_reduces_linear_generators() {
    let path = scratch("gb.toml", "[ring]\nvariables = [\"x\",\"y\",\"z\"]\n[ideal]\ngenerators = [\"x - y\", \"y - z\"]\n");
    let (code, r) = report(&["gb", "--config", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let mut basis: Vec<String> =
        checks(&r)[0]["computed"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect();
    basis.sort();
    assert_eq!(basis, vec!["x - z", "y - z"]);
}

#[test]
fn thm42_passes_over_the_koszul_base() {
    let (code, r) = report(&["verify", "thm42"]);
    assert_eq!(code, 0);
    assert!(checks(&r).iter().any(|c| c["cite"] == "Theorem 4.2" && c["pass"] == true));
}

#[test]
fn complex_f_with_e_two_vanishes_on_the_diagonal() {
    let (code, r) = report(&["verify", "complexF", "--e", "2", "--window", "6,3"]);
    assert_eq!(code, 0);
    assert!(checks(&r).iter().any(|c| c["claim"].as_str().unwrap().starts_with("H_odd(F)_diag vanishes") && c["pass"] == true));
}
