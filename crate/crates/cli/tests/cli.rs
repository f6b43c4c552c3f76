use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn superfit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superfit")).args(args).env_remove("SUPERFIT_LOG_DIR").output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn records(path: &Path) -> Vec<Value> {
    std::fs::read_to_string(path)
        .unwrap_or_default()
        .lines()
        .map(|l| serde_json::from_str(l).expect("each line is a JSON record"))
        .collect()
}

#[test]
fn ann_reports_minimal_generators() {
    let out = superfit(&["ann", "0", "2", "2", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("3 minimal generators: 3 in degree 2"), "{text}");

    let out = superfit(&["ann", "1", "1", "1", "1", "--json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["count"], 4);
    assert_eq!(v["degrees"], serde_json::json!([[3, 4]]));
}

#[test]
fn ann_in_characteristic_two_finds_the_determinant() {
    let v: Value = serde_json::from_slice(&superfit(&["ann", "1", "1", "1", "1", "--char", "2", "--json"]).stdout).unwrap();
    assert_eq!(v["count"], 1);
    assert_eq!(v["degrees"], serde_json::json!([[2, 1]]));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(superfit(&["verify", "thm1a", "0", "2", "2", "0"]).status.code(), Some(0));
    assert_eq!(superfit(&["verify", "lie", "1", "1", "1", "1"]).status.code(), Some(0));
    assert_eq!(superfit(&["verify", "thm1a", "1", "2", "2", "0", "--char", "3"]).status.code(), Some(1));
    let out = superfit(&["verify", "cauchy", "--tmax", "4", "--dims", "2", "2", "2", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("cauchy"));
}

#[test]
fn verify_json_report() {
    let out = superfit(&["verify", "cor2", "1", "1", "2", "0", "--json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["claim"], "cor2");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["instance"]["d"], 1);
    assert_eq!(v["witnesses"]["z_in_annihilator"], true);
}

#[test]
fn conjecture_check_reports_betti_table() {
    let out = superfit(&["verify", "conj41", "1", "1", "2", "1", "--imax", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("conj41"));
}

#[test]
fn usage_errors() {
    assert_eq!(superfit(&["verify", "thm1a", "1", "1"]).status.code(), Some(2));
    assert_eq!(superfit(&["ann", "1", "x", "1", "1"]).status.code(), Some(2));
    assert_eq!(superfit(&["sweep", "thm1a", "--d", "a..2"]).status.code(), Some(2));
}

#[test]
fn sweep_records_and_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("thm1a.jsonl");
    let log_arg = log.to_str().unwrap();
    let args = ["sweep", "thm1a", "--d", "0..1", "--e", "0..1", "--m", "0..2", "--n", "0..2", "--out", log_arg];

    let first = superfit(&args);
    assert_eq!(first.status.code(), Some(0));
    let recs = records(&log);
    assert_eq!(recs.len(), 36);
    assert!(recs.iter().all(|r| r["status"] == "pass" && r["engine_version"].is_string()));
    assert!(stdout(&first).contains("36 passed, 0 failed, 0 already recorded"));

    let second = superfit(&args);
    assert_eq!(second.status.code(), Some(0));
    assert!(stdout(&second).starts_with("0 passed, 0 failed, 36 already recorded"));
    assert_eq!(records(&log).len(), 36);
}

#[test]
fn sweep_flags_characteristic_three() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("p.jsonl");
    let out = superfit(&["sweep", "thm1a", "--d", "1", "--e", "2", "--m", "2", "--n", "0", "--char", "0,3", "--out", log.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let recs = records(&log);
    let status: Vec<(u64, String)> = recs.iter().map(|r| (r["instance"]["char"].as_u64().unwrap(), r["status"].as_str().unwrap().to_string())).collect();
    assert_eq!(status, vec![(0, "pass".to_string()), (3, "fail".to_string())]);
    let argv: Vec<&str> = recs[1]["command"].as_array().unwrap().iter().map(|a| a.as_str().unwrap()).collect();
    assert_eq!(argv, ["superfit", "verify", "thm1a", "1", "2", "2", "0", "--char", "3"]);
    // the recorded command reproduces the verdict
    assert_eq!(superfit(&argv[1..]).status.code(), Some(1));
}

#[test]
fn empty_grid_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("empty.jsonl");
    let out = superfit(&["sweep", "lie", "--d", "1..0", "--out", log.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read(&log).unwrap().len(), 0);
}

#[test]
fn truncated_log_line_is_recovered() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("lie.jsonl");
    std::fs::write(&log, "{\"timestamp\":\"2026").unwrap();
    let out = superfit(&["sweep", "lie", "--d", "1", "--e", "1", "--m", "1", "--n", "1", "--out", log.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&log).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(serde_json::from_str::<Value>(lines[1]).is_ok());
}

#[test]
fn default_log_location_follows_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_superfit"))
        .args(["sweep", "cauchy", "--m", "0..3", "--tmax", "3"])
        .env("SUPERFIT_LOG_DIR", dir.path().join("logs"))
        .output()
        .unwrap();
    assert!(out.status.success());
    // cauchy instances collapse across characteristics, one per grid point
    assert_eq!(records(&dir.path().join("logs").join("sweep-cauchy.jsonl")).len(), 4);
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "thm1b", "1", "1", "1", "1", "--json", "--samples", "3", "--seed", "11"];
    assert_eq!(superfit(&args).stdout, superfit(&args).stdout);
    let args = ["ann", "1", "1", "2", "1"];
    assert_eq!(superfit(&args).stdout, superfit(&args).stdout);
}
