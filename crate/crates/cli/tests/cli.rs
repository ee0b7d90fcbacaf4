//! End-to-end tests of the binary: the documented grammar, the JSON report
//! schema, exit codes, determinism across worker counts, and the
//! injected-fault self-test.

use serde_json::Value;
use std::process::{Command, Output};

fn adnil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adnil"))
        .args(args)
        .env_remove("ADNIL_BRUTE_MAX")
        .output()
        .expect("binary runs")
}

fn adnil_with_cap(cap: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adnil"))
        .args(args)
        .env("ADNIL_BRUTE_MAX", cap)
        .output()
        .expect("binary runs")
}

fn json_report(args: &[&str]) -> Value {
    let out = adnil(args);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON report")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn classify_worked_example() {
    let report = json_report(&[
        "classify",
        "10,10,9,6,5,4,4,3,1,1,1,1,0",
        "--n",
        "13",
        "--format",
        "json",
    ]);
    assert_eq!(report["command"], "classify");
    assert_eq!(report["n"], 13);
    assert_eq!(report["results"]["class_fast"], 3);
    assert_eq!(report["results"]["class_tableau"], 3);
    assert_eq!(report["results"]["touch_sequence"], serde_json::json!([1, 5, 10]));
    assert_eq!(report["results"]["dimension"], 55);
    for key in ["command", "n", "inputs", "results", "checks", "timing_ms"] {
        assert!(report.get(key).is_some(), "missing report key {key}");
    }
    assert!(report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["pass"] == true));
}

#[test]
fn classify_zero_ideal_and_validation_error() {
    let report = json_report(&["classify", "0", "--n", "1", "--format", "json"]);
    assert_eq!(report["results"]["class_fast"], 0);

    let out = adnil(&["classify", "4,1", "--n", "3"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("staircase bound"));
}

#[test]
fn count_methods_match_known_values() {
    let cases: [(&[&str], &str); 5] = [
        (&["count", "--n", "3", "--at-most", "2", "--method", "reflection"], "13"),
        (&["count", "--n", "5", "--at-most", "1", "--method", "sum"], "32"),
        (&["count", "--n", "3", "--class", "3", "--method", "sum"], "1"),
        (&["count", "--n", "3", "--class", "1", "--method", "det45"], "7"),
        (&["count", "--n", "4", "--at-most", "2", "--method", "contfrac"], "34"),
    ];
    for (args, want) in cases {
        let mut full = args.to_vec();
        full.extend(["--format", "json"]);
        let report = json_report(&full);
        assert_eq!(report["results"]["count"], *want, "args {args:?}");
    }
}

#[test]
fn count_requires_a_selector() {
    let out = adnil(&["count", "--n", "3"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn table_matches_qt_coefficients() {
    let report = json_report(&["table", "--n", "2", "--format", "json"]);
    let entries = report["results"]["entries"].as_array().unwrap();
    let want = [
        (0u64, 0u64, "1"),
        (1, 1, "1"),
        (2, 1, "2"),
        (3, 2, "1"),
    ];
    assert_eq!(entries.len(), want.len());
    for ((dim, class, count), entry) in want.iter().zip(entries) {
        assert_eq!(entry["dimension"].as_u64().unwrap(), *dim);
        assert_eq!(entry["class"].as_u64().unwrap(), *class);
        assert_eq!(entry["count"], *count);
    }
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));

    let report = json_report(&["table", "--n", "3", "--format", "json"]);
    assert_eq!(
        report["results"]["class_sums"],
        serde_json::json!(["1", "7", "5", "1"])
    );

    let report = json_report(&["table", "--n", "1", "--format", "json"]);
    let entries = report["results"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 2);
}

#[test]
fn dyck_forward_and_inverse() {
    let report = json_report(&[
        "dyck",
        "10,10,9,6,5,4,4,3,1,1,1,1,0",
        "--n",
        "13",
        "--format",
        "json",
    ]);
    assert_eq!(report["results"]["path"], "UDUUUDDDUUDUUDDUUUDDUDDDUUDD");
    assert_eq!(report["results"]["height"], 4);

    let report = json_report(&["dyck", "--invert", "UDUD", "--n", "1", "--format", "json"]);
    assert_eq!(report["results"]["partition"], "0");
    assert_eq!(report["results"]["class"], 0);

    // digit and JSON-array path literals
    let report = json_report(&["dyck", "--invert", "3434", "--n", "1", "--format", "json"]);
    assert_eq!(report["results"]["partition"], "0");
    let report = json_report(&[
        "dyck",
        "--invert",
        r#"["U","U","D","D"]"#,
        "--n",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(report["results"]["partition"], "1");

    let out = adnil(&["dyck", "--invert", "UDUD", "--n", "3"]);
    assert_eq!(exit_code(&out), 2); // wrong length
    let out = adnil(&["dyck", "--invert", "DUDU", "--n", "1"]);
    assert_eq!(exit_code(&out), 2); // not a Dyck path
}

#[test]
fn qt_with_bruteforce_verdict() {
    let report = json_report(&["qt", "--n", "2", "--format", "json"]);
    assert_eq!(
        report["results"]["polynomial"],
        "1 + q*t + 2*q*t^2 + q^2*t^3"
    );

    let report = json_report(&["qt", "--n", "9", "--brute", "--format", "json"]);
    let checks = report["checks"].as_array().unwrap();
    assert!(checks
        .iter()
        .any(|c| c["name"] == "formula_matches_bruteforce" && c["pass"] == true));

    let report = json_report(&["qt", "--n", "1", "--format", "json"]);
    assert_eq!(report["results"]["polynomial"], "1 + q*t");
}

#[test]
fn affine_window_values() {
    let report = json_report(&["affine", "2,1", "--n", "2", "--format", "json"]);
    assert_eq!(report["results"]["window"], serde_json::json!([-2, 2, 6]));
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));

    let report = json_report(&["affine", "0", "--n", "2", "--format", "json"]);
    assert_eq!(report["results"]["window"], serde_json::json!([1, 2, 3]));
}

#[test]
fn extremal_values_and_witnesses() {
    let report = json_report(&["extremal", "--n", "13", "--class", "3", "--format", "json"]);
    assert_eq!(report["results"]["dim_min"], 26);
    assert_eq!(report["results"]["dim_max"], 73);
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));

    let report = json_report(&["extremal", "--n", "3", "--dim", "3", "--format", "json"]);
    assert_eq!(report["results"]["class_min"], 1);
    assert_eq!(report["results"]["class_max"], 1);

    let report = json_report(&["extremal", "--n", "3", "--dim", "6", "--format", "json"]);
    assert_eq!(report["results"]["class_min"], 3);
    assert_eq!(report["results"]["class_max"], 3);

    let out = adnil(&["extremal", "--n", "3", "--dim", "7"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_passes_and_fault_injection_fails() {
    let out = adnil(&["verify", "--n-max", "3"]);
    assert_eq!(exit_code(&out), 0);

    let out = adnil(&["verify", "--n-max", "3", "--inject-fault"]);
    assert_eq!(exit_code(&out), 1);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("expected") && stderr.contains("got"), "{stderr}");

    let out = adnil(&["verify", "--n-max", "2", "--check", "affine", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["results"]["checks_run"], 1);
}

#[test]
fn brute_force_cap_is_env_overridable() {
    let out = adnil_with_cap("3", &["table", "--n", "5"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("bound"));

    let out = adnil_with_cap("13", &["count", "--n", "13", "--class", "0", "--method", "brute"]);
    assert_eq!(exit_code(&out), 0);

    let out = adnil_with_cap("4", &["verify", "--n-max", "8"]);
    assert_eq!(exit_code(&out), 2);

    let out = adnil_with_cap("not-a-number", &["table", "--n", "2"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn csv_only_for_tabular_commands() {
    let out = adnil(&["table", "--n", "2", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    let body = String::from_utf8_lossy(&out.stdout);
    assert!(body.starts_with("dimension,class,count\n"));

    let out = adnil(&["count", "--n", "3", "--at-most", "2", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);

    let out = adnil(&["classify", "1", "--n", "2", "--format", "csv"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn output_is_deterministic_across_worker_counts() {
    let strip_timing = |mut v: Value| -> Value {
        v.as_object_mut().unwrap().remove("timing_ms");
        v
    };
    for args in [
        vec!["qt", "--n", "7", "--brute", "--format", "json"],
        vec!["table", "--n", "6", "--format", "json"],
        vec!["count", "--n", "8", "--at-most", "3", "--method", "brute", "--format", "json"],
    ] {
        let mut with_one = args.clone();
        with_one.extend(["--jobs", "1"]);
        let mut with_four = args.clone();
        with_four.extend(["--jobs", "4"]);
        let a = strip_timing(json_report(&with_one));
        let b = strip_timing(json_report(&with_four));
        assert_eq!(a, b, "args {args:?}");
    }
}
