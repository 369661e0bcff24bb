use std::path::Path;
use std::process::{Command, Output};

fn orbiquot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbiquot")).args(args).output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    orbiquot(args).status.code().unwrap()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn usage_errors_exit_three() {
    assert_eq!(code(&["no-such-command"]), 3);
    assert_eq!(code(&["verify-entry", "no-such-entry"]), 3);
    assert_eq!(code(&["verify-tables", "--table", "7"]), 3);
    assert_eq!(code(&["build", "--entry", "hopf"]), 3);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn unknown_config_fields_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let config = path(dir.path(), "config.json");
    std::fs::write(&config, r#"{"seed": 1, "sampels": 10}"#).unwrap();
    assert_eq!(code(&["--config", &config, "verify-entry", "hopf"]), 3);
}

#[test]
fn verify_entry_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let json = path(dir.path(), "report.json");
    let csv = path(dir.path(), "samples.csv");
    assert_eq!(code(&["--seed", "3", "--json", &json, "--dump-samples", &csv, "verify-entry", "hopf"]), 0);
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["id"], "hopf");
    assert_eq!(report["status"], "pass");
    assert_eq!(report["config"]["seed"], 3);
    let samples = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(samples.lines().next(), Some("index,K,a_norm_sq"));
}

#[test]
fn build_writes_generators() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "rep.json");
    assert_eq!(code(&["build", "--entry", "hopf", "--out", &out]), 0);
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["ambient_dim"], 4);
    assert_eq!(doc["generators"].as_array().unwrap().len(), 1);
}

#[test]
fn distance_checks_point_dimensions() {
    let out = orbiquot(&["distance", "--entry", "hopf", "--p", "1,0,0,0", "--q", "0,1,0,0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("distance "));
    assert_eq!(code(&["distance", "--entry", "hopf", "--p", "1,0", "--q", "0,1,0,0"]), 3);
}

#[test]
fn coxeter_check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        (r#"{"mirrors": ["a", "b", "c"], "corners": [{"order": 2, "mirrors": ["a", "b"]}, {"order": 3, "mirrors": ["b", "c"]}, {"order": 2, "mirrors": ["c", "a"]}], "simply_connected": true}"#, 0),
        (r#"{"mirrors": ["m"], "corners": [{"order": 2, "mirrors": ["m", "m"]}], "simply_connected": true}"#, 1),
        (r#"{"mirrors": ["a", "b"], "corners": [{"order": 2, "mirrors": ["a", "b"]}], "simply_connected": false}"#, 2),
        (r#"{"mirrors": ["a"], "corners": [{"order": 1, "mirrors": ["a", "a"]}], "simply_connected": true}"#, 3),
    ];
    for (k, (text, expected)) in cases.iter().enumerate() {
        let file = path(dir.path(), &format!("complex{k}.json"));
        std::fs::write(&file, text).unwrap();
        assert_eq!(code(&["coxeter-check", "--in", &file]), *expected, "{text}");
    }
}
