use std::process::{Command, Output};

use serde_json::Value;

fn numsemi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_numsemi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_stdout(args: &[&str]) -> Value {
    let out = numsemi(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("one JSON object")
}

fn error_kind(out: &Output) -> String {
    let err: Value = serde_json::from_slice(&out.stderr).expect("JSON error object");
    err["error"].as_str().unwrap().to_string()
}

#[test]
fn classify_three_four_five() {
    let v = json_stdout(&["classify", "3", "4", "5", "--bg-bound", "2"]);
    assert_eq!(v["type"], 2);
    assert_eq!(v["h_omega"], 2);
    assert_eq!(v["nearly_gorenstein"], true);
    assert_eq!(v["almost_gorenstein"], true);
    assert_eq!(v["bg_upper"], 1);
}

#[test]
fn classify_defaults_bg_bound_to_h_omega() {
    let v = json_stdout(&["classify", "2", "3"]);
    assert_eq!(v["gorenstein"], true);
    assert_eq!(v["bg_upper"], 0);
}

#[test]
fn herzog_rejects_symmetric() {
    let out = numsemi(&["herzog", "4", "5", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "SymmetricSemigroup");
    assert_eq!(String::from_utf8_lossy(&out.stderr).lines().count(), 1);
}

#[test]
fn herzog_matrix() {
    let v = json_stdout(&["herzog", "⟨3,5,7⟩"]);
    assert_eq!(v["ordering"], serde_json::json!([3, 5, 7]));
    assert_eq!(v["alpha_p"], 3);
    assert_eq!(v["h_omega"], 2);
}

#[test]
fn h_invariant_of_worked_example() {
    let v = json_stdout(&[
        "h-invariant",
        "--semigroup",
        "3",
        "4",
        "5",
        "--ideal",
        "4",
        "5",
        "--verify",
    ]);
    assert_eq!(v["h"], 2);
    let v = json_stdout(&["h-invariant", "--semigroup", "3,4,5", "--ideal", "-7", "1"]);
    // 1 = -7 + 8 is redundant
    assert_eq!(v["ideal"], serde_json::json!([-7]));
    assert_eq!(v["h"], 0);
}

#[test]
fn partial_trace_and_trace() {
    let v = json_stdout(&[
        "partial-trace",
        "--semigroup",
        "3",
        "4",
        "5",
        "--ideal",
        "4",
        "5",
        "--verify",
    ]);
    assert_eq!(v["partial_trace"], serde_json::json!([3, 4]));
    assert_eq!(v["is_partial_trace"], false);
    let v = json_stdout(&[
        "trace",
        "--semigroup",
        "3",
        "4",
        "5",
        "--ideal",
        "3",
        "4",
        "--verify",
    ]);
    assert_eq!(v["trace"], serde_json::json!([3, 4, 5]));
    assert_eq!(v["is_trace_ideal"], false);
}

#[test]
fn ideal_operations() {
    let v = json_stdout(&[
        "ideal",
        "colon",
        "--semigroup",
        "3",
        "4",
        "5",
        "--ideal",
        "3",
        "4",
        "--other",
        "3",
        "4",
        "--verify",
    ]);
    assert_eq!(v["result"], serde_json::json!([0]));
    let v = json_stdout(&[
        "ideal",
        "power",
        "--semigroup",
        "3",
        "4",
        "5",
        "--ideal",
        "3",
        "4",
        "--by",
        "2",
    ]);
    assert_eq!(v["result"], serde_json::json!([6, 7, 8]));
    let v = json_stdout(&[
        "ideal",
        "colength",
        "--semigroup",
        "3",
        "4",
        "5",
        "--ideal",
        "4",
        "5",
        "--verify",
    ]);
    assert_eq!(v["result"], 3);

    let out = numsemi(&["ideal", "sum", "--semigroup", "3", "4", "5", "--ideal", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "Usage");
    let out = numsemi(&[
        "ideal",
        "colength",
        "--semigroup",
        "3",
        "4",
        "5",
        "--ideal",
        "-1",
    ]);
    assert_eq!(error_kind(&out), "NotIntegral");
}

#[test]
fn semigroup_report_and_errors() {
    let v = json_stdout(&["semigroup", "3", "5", "7"]);
    assert_eq!(v["pseudo_frobenius"], serde_json::json!([2, 4]));
    assert_eq!(v["gaps"], serde_json::json!([1, 2, 4]));

    for (args, kind) in [
        (&["semigroup", "2", "4"][..], "GcdNotOne"),
        (&["semigroup", "3", "x"], "InvalidNumber"),
        (
            &["semigroup", "3", "123456789012345678901234567890"],
            "Overflow",
        ),
        (&["semigroup", "0", "3"], "NonPositiveGenerator"),
    ] {
        let out = numsemi(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert_eq!(error_kind(&out), kind, "{args:?}");
    }
}

#[test]
fn tsv_single_query() {
    let out = numsemi(&["semigroup", "3", "4", "5", "--format", "tsv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("generators\tminimal_generators\t"));
    assert!(lines[1].starts_with("3,4,5\t3,4,5\t"));
}

#[test]
fn sweep_template_tsv() {
    let out = numsemi(&[
        "sweep",
        "--template",
        "2n+1,2n+2,2n+3",
        "--from",
        "1",
        "--to",
        "10",
        "--format",
        "tsv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split('\t').collect();
    assert_eq!(
        header,
        [
            "generators",
            "multiplicity",
            "edim",
            "type",
            "F",
            "h_omega",
            "h_omega_formula",
            "gorenstein",
            "nearly_gorenstein",
            "almost_gorenstein",
            "bg_upper",
            "skipped"
        ]
    );
    for (n, line) in (1..=10).zip(lines) {
        let cells: Vec<&str> = line.split('\t').collect();
        assert_eq!(
            cells[0],
            format!("{},{},{}", 2 * n + 1, 2 * n + 2, 2 * n + 3)
        );
        assert_eq!(cells[5], (n + 1).to_string());
        assert_eq!(cells[6], cells[5]);
    }
}

#[test]
fn sweep_skips_invalid_members_in_order() {
    let out = numsemi(&["sweep", "3,4,5", "2,4", "4,5,6", "--jobs", "3"]);
    assert!(out.status.success());
    let rows: Vec<Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["h_omega"], 2);
    assert_eq!(rows[1]["skipped"]["error"], "GcdNotOne");
    assert_eq!(rows[2]["gorenstein"], true);
    assert_eq!(rows[2]["h_omega_formula"], Value::Null);
}

#[test]
fn sweep_is_deterministic_across_job_counts() {
    let one = numsemi(&["sweep", "--three-generated", "12", "--jobs", "1"]);
    let four = numsemi(&["sweep", "--three-generated", "12", "--jobs", "4"]);
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
    for line in String::from_utf8(one.stdout).unwrap().lines() {
        let row: Value = serde_json::from_str(line).unwrap();
        if !row["h_omega_formula"].is_null() {
            assert_eq!(row["h_omega_formula"], row["h_omega"]);
        }
    }
}

#[test]
fn sweep_writes_output_file() {
    let dir = std::env::temp_dir().join(format!("numsemi-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("family.txt");
    let output = dir.join("rows.tsv");
    std::fs::write(&input, "# family\n3,4,5\n⟨3,5,7⟩\n").unwrap();
    let out = numsemi(&[
        "sweep",
        "--input",
        input.to_str().unwrap(),
        "--output",
        output.to_str().unwrap(),
        "--format",
        "tsv",
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&output).unwrap();
    assert_eq!(text.lines().count(), 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bg_search() {
    let v = json_stdout(&["bg", "3", "4", "5", "--bg-bound", "2"]);
    assert_eq!(v["best_colength"], 1);
    assert_eq!(v["witness"], serde_json::json!([3, 4]));
    let out = numsemi(&["bg", "1"]);
    assert_eq!(error_kind(&out), "FullSemigroup");
}
