use std::process::{Command, Output};

use clifford3_core::BoundResult;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    run_with_env(args, None)
}

fn run_with_env(args: &[&str], output: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_clifford3"));
    cmd.args(args).env_remove("CLIFFORD3_OUTPUT");
    if let Some(format) = output {
        cmd.env("CLIFFORD3_OUTPUT", format);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn error_code(out: &Output) -> String {
    let body: Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
    body["code"].as_str().unwrap().to_string()
}

fn csv_rows(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader.headers().unwrap().iter().map(String::from).collect();
    let rows = reader.records().map(|r| r.unwrap().iter().map(String::from).collect()).collect();
    (header, rows)
}

#[test]
fn bound_on_a_sharp_member() {
    let out = run(&[
        "bound",
        "--genus",
        "3",
        "--rank",
        "3",
        "--degree",
        "10",
        "--s1",
        "1",
        "--s2",
        "2",
        "--hyperelliptic",
    ]);
    assert!(out.status.success());
    let result: BoundResult = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(result.value, 6);
    assert_eq!(result.assumption_labels(), ["hyperelliptic"]);
}

#[test]
fn bound_json_round_trips() {
    let out = run(&[
        "bound", "--genus", "4", "--rank", "3", "--degree", "6", "--s1", "-3", "--s2", "0", "--s1f", "1",
    ]);
    assert!(out.status.success());
    let raw: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let parsed: BoundResult = serde_json::from_value(raw.clone()).unwrap();
    assert_eq!(serde_json::to_value(&parsed).unwrap(), raw);
    assert_eq!(parsed.value, 5);
}

#[test]
fn bound_on_a_line_bundle() {
    let out = run(&["bound", "--genus", "2", "--rank", "1", "--degree", "2"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["value"], 2);
}

#[test]
fn validation_errors_exit_two() {
    let out = run(&["bound", "--genus", "3", "--rank", "3", "--degree", "5", "--s1", "1", "--s2", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_code(&out), "CongruenceViolation");
    assert!(out.stdout.is_empty());

    let out =
        run(&["bound", "--genus", "3", "--rank", "3", "--degree", "10", "--s1", "1", "--s2", "2", "--delta"]);
    assert_eq!(error_code(&out), "MissingS1F");

    let out = run(&[
        "bound",
        "--genus",
        "5",
        "--rank",
        "3",
        "--degree",
        "10",
        "--s1",
        "7",
        "--s2",
        "2",
        "--s1f",
        "1",
        "--quotient-bound",
    ]);
    assert_eq!((out.status.code(), error_code(&out)), (Some(2), "HypothesisFailed".into()));

    let out = run(&["bound", "--genus", "3"]);
    assert_eq!((out.status.code(), error_code(&out)), (Some(2), "InvalidArguments".into()));
}

#[test]
fn table_follows_the_congruence() {
    let out = run(&["table", "--genus", "2", "--s1", "0", "--s2", "0"]);
    assert!(out.status.success());
    let (header, rows) = csv_rows(&stdout(&out));
    assert_eq!(header, ["d", "value", "case", "exact"]);
    let degrees: Vec<&str> = rows.iter().map(|r| r[0].as_str()).collect();
    assert_eq!(degrees, ["0", "3", "6"]);
}

#[test]
fn table_includes_the_upper_edge() {
    let out = run(&["table", "--genus", "4", "--s1", "1", "--s2", "2"]);
    let (_, rows) = csv_rows(&stdout(&out));
    assert_eq!(rows.last().unwrap()[0], "16");
}

#[test]
fn empty_table_is_header_only() {
    let out = run(&["table", "--genus", "2", "--s1", "0", "--s2", "0", "--d-min", "9", "--d-max", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "d,value,case,exact\n");
    let out = run(&["table", "--genus", "2", "--s1", "0", "--s2", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_format_override() {
    let out = run_with_env(&["table", "--genus", "2", "--s1", "0", "--s2", "0"], Some("json"));
    let rows: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 3);
    let out = run_with_env(&["bound", "--genus", "2", "--rank", "1", "--degree", "2"], Some("csv"));
    let (header, rows) = csv_rows(&stdout(&out));
    assert_eq!(header, ["value", "case", "exact", "assumptions"]);
    assert_eq!(rows[0][0], "2");
}

#[test]
fn krawtchouk_value() {
    let out = run(&["krawtchouk", "2", "2", "4"]);
    assert_eq!(stdout(&out).trim(), "-2");
    let out = run(&["krawtchouk", "2", "2", "4", "--oracle"]);
    assert_eq!(stdout(&out).trim(), "-2");
    let out = run(&["krawtchouk", "1", "5", "4"]);
    assert_eq!(error_code(&out), "InvalidKrawtchoukQuery");
}

#[test]
fn elmtrans_generic_trajectory() {
    let out = run(&["elmtrans", "--rank", "3", "--genus", "5", "--steps", "3"]);
    assert!(out.status.success());
    let lines: Vec<Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[3]["s"][0], 3);
    assert_eq!(lines[3]["degree"], 6);
}

#[test]
fn elmtrans_with_choices() {
    let out = run(&[
        "elmtrans",
        "--rank",
        "3",
        "--genus",
        "3",
        "--steps",
        "2",
        "--choices",
        "00_01",
        "--hyperelliptic",
    ]);
    let last: Value = serde_json::from_str(stdout(&out).lines().last().unwrap()).unwrap();
    assert_eq!(last["s"], serde_json::json!([2, 1]));
    let out = run(&["elmtrans", "--rank", "3", "--genus", "3", "--steps", "2", "--choices", "0"]);
    assert_eq!(error_code(&out), "InvalidChoices");
}

#[test]
fn examples_single_family() {
    let out = run(&["examples", "--family", "a", "--genus", "5", "--k", "2"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!((v["exact_h0"].as_i64(), v["bound"]["value"].as_i64()), (Some(10), Some(10)));
    let out = run(&["examples", "--family", "b", "--genus", "2", "--m", "2"]);
    assert_eq!(error_code(&out), "HypothesisFailed");
    let out = run(&["examples", "--family", "c", "--genus", "2", "--k", "0", "--variant", "e2"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["attainable_h0"], 4);
}

#[test]
fn example_suite_is_sharp_on_the_first_family() {
    let out = run(&["examples", "--suite", "--max-genus", "5"]);
    assert!(out.status.success());
    let (header, rows) = csv_rows(&stdout(&out));
    assert_eq!(
        header,
        ["family", "genus", "params", "degree", "s1", "s2", "exact_h0", "bound", "case", "sharp"]
    );
    let first: Vec<_> = rows.iter().filter(|r| r[0] == "a").collect();
    assert!(!first.is_empty());
    assert!(first.iter().all(|r| r[9] == "true" && r[6] == r[7]));
    assert!(rows.iter().all(|r| r[6].parse::<i64>().unwrap() <= r[7].parse::<i64>().unwrap()));
}
