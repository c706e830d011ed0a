use std::process::{Command, Output};

use serde_json::Value;

const TABLE1_GOLDEN: &str = include_str!("../../core/golden/table1.csv");
const TABLE2_GOLDEN: &str = include_str!("../../core/golden/table2.csv");

fn rdpcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rdpcalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 output")
}

fn json(args: &[&str]) -> (i32, Value, String) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = rdpcalc(&full);
    let text = stdout(&out);
    let value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: {e}\n{text}"));
    (out.status.code().expect("exit code"), value, text)
}

const D9_1: &str = "z^2+x^2*y+y^4*z+x*y^3*z";

#[test]
fn classify_e8_4_in_characteristic_two() {
    let (code, value, _) = json(&[
        "classify",
        "--char",
        "2",
        "--family",
        "E",
        "--index",
        "8",
        "--coindex",
        "4",
    ]);
    assert_eq!(code, 0);
    let record = &value[0];
    assert_eq!(record["l"], 8);
    assert_eq!(record["r"], 4);
    assert_eq!(record["len_a"], 8);
    assert_eq!(record["len_ap"], 37);
    assert_eq!(record["mu"], 3);
    assert_eq!(record["free"], false);
    assert_eq!(record["surjective"], false);
}

#[test]
fn table2_check_passes() {
    let out = rdpcalc(&["table2", "--check"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
}

#[test]
fn colength_of_the_d9_1_jacobian_ideal() {
    let (code, value, _) = json(&["colength", "--char", "2", D9_1, "--with-jacobian"]);
    assert_eq!(code, 0);
    assert_eq!(value["length"], 14);

    let out = rdpcalc(&[
        "colength",
        "--char",
        "2",
        D9_1,
        "--with-jacobian",
        "--oracle-cap",
        "48",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("14"));
}

#[test]
fn colength_of_a_non_primary_ideal_is_infinite() {
    let (code, value, _) = json(&["colength", "--char", "2", "z^2+x^2*y", "--gen", "x^2"]);
    assert_eq!(code, 0);
    assert_eq!(value["length"], Value::Null);
}

#[test]
fn mu_drops_vanishing_partials() {
    let (code, value, _) = json(&["mu", "--char", "5", "x^2+y^3+z^5"]);
    assert_eq!(code, 0);
    assert_eq!(value["mu"], 2);
}

#[test]
fn sl2_suite_is_clean_and_seeded() {
    let out = rdpcalc(&["sl2-check", "--char", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    let args = [
        "sl2-check",
        "--char",
        "11",
        "--samples",
        "300",
        "--seed",
        "42",
    ];
    let (code, first, _) = json(&args);
    let (_, second, _) = json(&args);
    assert_eq!(code, 0);
    assert_eq!(first, second);
}

#[test]
fn triple_check_reports_both_signs_of_f() {
    let common = [
        "triple-check",
        "--char",
        "5",
        "--equation",
        "z^2-x*y",
        "--h",
        "x=-2*x; y=2*y",
        "--e",
        "x=2*z; z=y",
    ];
    let (code, value, _) = json(&[&common[..], &["--f", "y=-2*z; z=-x"]].concat());
    assert_eq!(code, 0);
    assert_eq!(value["holds"], true);

    let (code, value, _) = json(&[&common[..], &["--f", "y=2*z; z=x"]].concat());
    assert_eq!(code, 1);
    assert_eq!(value["holds"], false);
}

#[test]
fn triple_check_names_non_stabilizing_members() {
    let (code, value, _) = json(&[
        "triple-check",
        "--char",
        "3",
        "--equation",
        "x^2+y^2+z^2",
        "--h",
        "x=x",
        "--e",
        "x=y",
        "--f",
        "x=z",
    ]);
    assert_eq!(code, 1);
    assert_eq!(value["not_stabilizing"], serde_json::json!(["h", "e", "f"]));
}

#[test]
fn verify_dtype_hilbert_burch_rows_hold() {
    let (_, value, _) = json(&["verify-dtype"]);
    let rows = value["hilbert_burch"].as_array().expect("array");
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r["holds"] == true));
}

#[test]
fn usage_errors_exit_two() {
    let cases: [&[&str]; 7] = [
        &["table1", "--bogus"],
        &["frobnicate"],
        &["classify", "--char", "4", "--family", "A", "--index", "1"],
        &["classify", "--char", "2", "--equation", "x^2+"],
        &[
            "classify",
            "--char",
            "2",
            "--family",
            "E",
            "--index",
            "7",
            "--coindex",
            "9",
        ],
        &[
            "colength",
            "--char",
            "2",
            D9_1,
            "--with-jacobian",
            "--gen",
            "x",
        ],
        &["verify-dtype", "--char", "3"],
    ];
    for args in cases {
        let out = rdpcalc(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", stderr(&out));
        assert!(!stderr(&out).is_empty());
    }
}

#[test]
fn unknown_flag_is_named_in_the_message() {
    let out = rdpcalc(&["mu", "--char", "3", "x^2", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--frobnicate"));
}

#[test]
fn json_output_round_trips() {
    let runs: [&[&str]; 8] = [
        &[
            "classify",
            "--char",
            "3",
            "--family",
            "E",
            "--index",
            "8",
            "--coindex",
            "1",
        ],
        &["table1", "--char", "2,3"],
        &["table2"],
        &[
            "colength",
            "--char",
            "2",
            D9_1,
            "--with-jacobian",
            "--oracle-cap",
            "32",
        ],
        &["mu", "--char", "2", D9_1],
        &["sl2-check", "--char", "5"],
        &[
            "triple-check",
            "--char",
            "5",
            "--equation",
            "z^2-x*y",
            "--h",
            "x=-2*x; y=2*y",
            "--e",
            "x=2*z; z=y",
            "--f",
            "y=-2*z; z=-x",
        ],
        &["verify-dtype", "--max-n", "4"],
    ];
    for args in runs {
        let (_, value, text) = json(args);
        let again = serde_json::to_string_pretty(&value).unwrap() + "\n";
        assert_eq!(again, text, "{args:?}");
    }
}

#[test]
fn table_csv_matches_golden_files() {
    let out = rdpcalc(&["table1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), TABLE1_GOLDEN);

    let out = rdpcalc(&["table2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), TABLE2_GOLDEN);
}

#[test]
fn table_checks_are_deterministic_across_worker_counts() {
    for verb in ["table1", "table2"] {
        let runs: Vec<Output> = ["1", "2", "4", "2"]
            .iter()
            .map(|jobs| rdpcalc(&[verb, "--check", "--jobs", jobs, "--format", "csv"]))
            .collect();
        for run in &runs[1..] {
            assert_eq!(run.status.code(), runs[0].status.code(), "{verb}");
            assert_eq!(run.stdout, runs[0].stdout, "{verb}");
            assert_eq!(run.stderr, runs[0].stderr, "{verb}");
        }
    }
}

#[test]
fn table1_check_flags_exactly_the_two_conflicting_entries() {
    let out = rdpcalc(&["table1", "--check"]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    let lines: Vec<&str> = err.lines().filter(|l| l.starts_with("mismatch")).collect();
    assert_eq!(lines.len(), 2, "{err}");
    assert!(lines[0].contains("E6^1 at p=2"));
    assert!(lines[1].contains("E7^2 at p=2"));
}

#[test]
fn golden_table2_agrees_with_table1_golden_on_shared_entries() {
    let key = |line: &str| line.split(',').take(4).collect::<Vec<_>>().join(",");
    for row in TABLE2_GOLDEN.lines().skip(1) {
        let k = key(row);
        if let Some(other) = TABLE1_GOLDEN.lines().find(|l| key(l) == k) {
            assert_eq!(other, row);
        }
    }
}
