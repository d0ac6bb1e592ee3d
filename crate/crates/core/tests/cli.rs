use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pqtriples")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn census_csv_lists_fourteen_pairs() {
    let out = run(&["census", "--p", "1", "--q", "1", "--genus", "2", "--dv", "0:3", "--dw", "0:3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("d_v,d_w,mw_value,minima_type"));
    assert_eq!(lines.count(), 14);
}

#[test]
fn chambers_for_worked_triple() {
    let v = json(&["chambers", "--n1", "2", "--n2", "1", "--d1", "3", "--d2", "0"]);
    assert_eq!(v["schema_version"], "1");
    let r = &v["result"];
    assert_eq!(r["alpha_max"], "6");
    assert_eq!(r["walls"], serde_json::json!(["0", "3/2", "3", "9/2", "6"]));
    assert_eq!(r["chambers"].as_array().unwrap().len(), 4);
    assert_eq!(r["oracle_agrees"], true);
}

#[test]
fn translate_both_sides() {
    let v = json(&["translate", "--p", "2", "--q", "3", "--dv", "0", "--dw", "0", "--genus", "2"]);
    let r = &v["result"];
    assert_eq!(r["minima_type"], "Both");
    assert_eq!(r["triples"]["CZero"], serde_json::json!({"n1": 2, "n2": 3, "d1": 4, "d2": 0}));
    assert_eq!(r["triples"]["BZero"], serde_json::json!({"n1": 3, "n2": 2, "d1": 6, "d2": 0}));
}

#[test]
fn json_keys_are_sorted() {
    let out = run(&["chambers", "--n1", "2", "--n2", "1", "--d1", "3", "--d2", "0"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let top: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("  \""))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    let mut sorted = top.clone();
    sorted.sort();
    assert_eq!(top, sorted);
}

#[test]
fn input_errors_exit_one() {
    for args in [
        &["chambers", "--n1", "0", "--n2", "1", "--d1", "0", "--d2", "0"][..],
        &["census", "--p", "1", "--q", "1", "--genus", "1", "--dv", "0", "--dw", "0"],
        &["census", "--bogus"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn check_passes() {
    let out = run(&["check", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}
