//! End-to-end runs of the `catalan` binary: golden table output, exit
//! codes, and the json contract.

use std::process::{Command, Output};

fn catalan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catalan"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout must be utf-8")
}

#[test]
fn table_output_is_byte_identical_to_the_golden_fixtures() {
    let fixtures: [(&str, &str, &str); 7] = [
        ("C", "8", include_str!("golden/table_C.txt")),
        ("B", "7", include_str!("golden/table_B.txt")),
        ("A", "7", include_str!("golden/table_A.txt")),
        ("X", "6", include_str!("golden/table_X.txt")),
        ("Y", "6", include_str!("golden/table_Y.txt")),
        ("Z", "7", include_str!("golden/table_Z.txt")),
        ("W", "9", include_str!("golden/table_W.txt")),
    ];
    for (letter, rows, fixture) in fixtures {
        let out = catalan(&["table", "--triangle", letter, "--rows", rows]);
        assert!(out.status.success(), "table {letter} failed");
        assert_eq!(stdout(&out), fixture, "table {letter} drifted from its fixture");
    }
}

#[test]
fn weighted_table_at_one_two_renders_the_odd_index_triangle() {
    let weighted = catalan(&["table", "--triangle", "M", "--rows", "5", "--x", "1", "--y", "2"]);
    let plain = catalan(&["table", "--triangle", "A", "--rows", "5"]);
    assert!(weighted.status.success() && plain.status.success());
    assert_eq!(stdout(&weighted), stdout(&plain));
}

#[test]
fn weighted_table_accepts_fractional_weights() {
    let out = catalan(&["table", "--triangle", "M", "--rows", "4", "--x", "1/2", "--y", "1/3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("5/4"), "row 2 column 0 should be 5/4:\n{text}");
    assert!(text.contains("5/6"), "row 2 column 1 should be 5/6:\n{text}");
}

#[test]
fn verify_prints_the_case_count_and_passes() {
    let out = catalan(&[
        "verify", "--identity", "shapiro_convolution", "--n-max", "10", "--m-max", "10",
    ]);
    assert!(out.status.success());
    assert!(
        stdout(&out).contains("121 cases, pass"),
        "unexpected verify output:\n{}",
        stdout(&out)
    );
}

#[test]
fn verify_all_json_round_trips_with_stable_fields() {
    let out = catalan(&[
        "verify-all",
        "--n-max", "6",
        "--m-max", "6",
        "--p-min", "-2",
        "--p-max", "2",
        "--r-min", "-2",
        "--r-max", "2",
        "--format", "json",
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value =
        serde_json::from_str(&stdout(&out)).expect("json output must parse");
    let reports = parsed.as_array().expect("top level must be an array");
    assert_eq!(reports.len(), 28);
    assert_eq!(reports[0]["id"], "row_sum_B");
    assert_eq!(reports[reports.len() - 1]["id"], "specializations");
    for report in reports {
        let obj = report.as_object().expect("each report must be an object");
        assert!(obj.contains_key("id") && obj.contains_key("pass") && obj.contains_key("cases"));
        assert_eq!(report["pass"], true, "{} failed", report["id"]);
        assert!(report["counterexample"].is_null());
    }
}

#[test]
fn csv_table_has_a_header_and_sum_column() {
    let out = catalan(&["table", "--triangle", "W", "--rows", "4", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n,0,1,sum\n0,1,,1\n1,2,,2\n2,4,1,5\n3,10,4,14\n");
}

#[test]
fn usage_errors_exit_with_code_two() {
    let bad: [&[&str]; 8] = [
        &["table", "--triangle", "Q", "--rows", "3"],
        &["table", "--triangle", "c", "--rows", "3"],
        &["table", "--triangle", "M", "--rows", "3"],
        &["table", "--triangle", "C", "--rows", "3", "--x", "1"],
        &["table", "--triangle", "M", "--rows", "3", "--x", "0.5", "--y", "2"],
        &["verify", "--identity", "no_such_identity"],
        &["table", "--triangle", "C", "--rows", "3", "--no-such-flag"],
        &["bogus"],
    ];
    for args in bad {
        let out = catalan(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?} should be a usage error");
        assert!(!out.stderr.is_empty(), "args {args:?} should explain on stderr");
    }
}

#[test]
fn oracle_bijection_and_series_pass_on_small_sizes() {
    let runs: [&[&str]; 5] = [
        &["oracle", "--check", "motzkin", "--n-max", "7"],
        &["oracle", "--check", "ballot", "--n-max", "7"],
        &["oracle", "--check", "dyck", "--n-max", "7"],
        &["bijection", "--which", "phi", "--n", "1", "--m", "2", "--r", "1"],
        &["bijection", "--which", "dyck-split", "--n", "2", "--m", "1"],
    ];
    for args in runs {
        let out = catalan(args);
        assert!(out.status.success(), "args {args:?} failed");
        assert!(stdout(&out).contains("pass"), "args {args:?} did not report pass");
    }
    let out = catalan(&["series", "--check", "riordan", "--order", "12", "--k-max", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for letter in ["C", "B", "A"] {
        assert!(text.contains(&format!("riordan {letter}")), "missing family {letter}:\n{text}");
    }
}

#[test]
fn bijection_listing_shows_the_pairing() {
    let out = catalan(&["bijection", "--which", "phi", "--n", "0", "--m", "1", "--r", "1", "--list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("->"), "listing should show pairs:\n{text}");
    assert!(text.lines().any(|l| l.starts_with("first-lifted") || l.starts_with("second-lifted")));
}
