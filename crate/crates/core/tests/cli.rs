//! The `qdg` binary: exit codes, report schema and determinism.

use std::process::{Command, Output};

fn qdg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdg")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = qdg(args);
    serde_json::from_slice(&out.stdout).expect("json report")
}

/// The report with timing fields removed.
fn untimed(mut v: serde_json::Value) -> serde_json::Value {
    for c in v["checks"].as_array_mut().unwrap() {
        c.as_object_mut().unwrap().remove("ms");
    }
    v
}

#[test]
fn nf_output_and_codes() {
    let out = qdg(&["nf", "x1*x0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, b"q^2 * [x0 | x1 | -] + (1 - q^2) * [- | - | c0]\n");
    let out = qdg(&["nf", "x3*x0"]);
    assert_eq!(out.stdout, b"q^-2 * [x0 | x3 | -] + (1 - q^-2) * [- | - | c3]\n");
    assert_eq!(qdg(&["nf", "x0 + "]).status.code(), Some(2));
    assert_eq!(qdg(&["nf", "x"]).status.code(), Some(2));
}

#[test]
fn budget_exit_code() {
    let out = Command::new(env!("CARGO_BIN_EXE_qdg"))
        .args(["nf", "(x0 + x1 + x2 + x3)^8"])
        .env("QDG_TERM_BUDGET", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out =
        Command::new(env!("CARGO_BIN_EXE_qdg")).args(["nf", "x1^9*x0"]).env("QDG_WORD_CAP", "4").output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_qdg")).args(["nf", "x0"]).env("QDG_WORD_CAP", "lots").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_report_schema() {
    let v = json(&["verify", "--check", "s_commutation.*", "--json"]);
    assert_eq!(v["summary"]["pass"], 8);
    assert_eq!(v["summary"]["fail"], 0);
    assert!(v["version"].is_string());
    assert_eq!(v["config"]["schema"], 1);
    for c in v["checks"].as_array().unwrap() {
        let keys: Vec<&str> = c.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["ms", "name", "status"]);
        assert_eq!(c["status"], "pass");
    }
    assert_eq!(qdg(&["verify", "--check", "nosuch"]).status.code(), Some(2));
}

#[test]
fn reports_are_deterministic_across_jobs() {
    let one = untimed(json(&["verify", "--all", "--json", "--jobs", "1"]));
    let four = untimed(json(&["verify", "--json", "--jobs", "4"]));
    assert_eq!(one, four);
    let names: Vec<&str> = one["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(one["summary"]["fail"], 0);
}

#[test]
fn human_table() {
    let out = qdg(&["verify", "--check", "qdg.*"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().next().unwrap().starts_with("PASS  qdg.first"));
    assert!(text.ends_with("2 passed, 0 failed\n"));
}

#[test]
fn dims_table_and_cap() {
    let out = qdg(&["dims", "--max", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let dims: Vec<&str> = text.lines().skip(1).map(|l| l.split_whitespace().nth(3).unwrap()).collect();
    assert_eq!(dims, ["1", "2", "4", "8", "14", "24"]);
    let v = json(&["dims", "--max", "4", "--json"]);
    assert_eq!(v["rows"][4]["dim"], 14);
    assert_eq!(qdg(&["dims", "--max", "1000"]).status.code(), Some(2));
}
