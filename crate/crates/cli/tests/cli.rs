//! End-to-end behaviour of the `verify` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .output()
        .expect("verify runs")
}

fn sample_manifest() -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus/manifest.json")
        .display()
        .to_string()
}

#[test]
fn passing_run_exits_zero_and_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = verify(&["--max-order", "32", "--out", out.to_str().unwrap()]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["reportFormat"], 1);
    assert_eq!(report["summary"]["fail"], 0);
    assert_eq!(report["corpus"]["maxOrder"], 32);
    let total = report["summary"]["total"].as_u64().unwrap();
    assert_eq!(total as usize, report["records"].as_array().unwrap().len());
}

#[test]
fn malformed_output_path_exits_two() {
    let o = verify(&[
        "--max-order",
        "8",
        "--out",
        "/nonexistent-dir/sub/report.json",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/nonexistent-dir/sub/report.json"));
}

#[test]
fn operational_errors_exit_two() {
    assert_eq!(verify(&["--suite", "thm9"]).status.code(), Some(2));
    assert_eq!(
        verify(&["--corpus", "/no/such/manifest.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(verify(&["--format", "yaml"]).status.code(), Some(2));
    assert_eq!(verify(&["--jobs", "0"]).status.code(), Some(2));
    assert_eq!(verify(&["--max-order", "1"]).status.code(), Some(2));
}

#[test]
fn markdown_has_series_tables() {
    let o = verify(&["--corpus", &sample_manifest(), "--format", "markdown"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("### slice(3)-file"));
    assert!(text.contains("| i | \\|G_i\\| | \\|V_i\\| | \\|Y_i\\| | \\|D_i\\| | \\|E_i\\| |"));
    assert!(text.contains("|G:V_1| = 9, |G:D_3| = 3"), "{text}");
    assert!(text.contains("## Coverage"));
}

#[test]
fn suite_selection_and_jobs() {
    let a = verify(&[
        "--max-order",
        "64",
        "--suite",
        "sandwich,thm2d",
        "--jobs",
        "1",
    ]);
    let b = verify(&[
        "--max-order",
        "64",
        "--suite",
        "sandwich,thm2d",
        "--jobs",
        "3",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let report: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let ids: std::collections::BTreeSet<&str> = report["records"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["checkId"].as_str().unwrap())
        .collect();
    assert_eq!(ids.into_iter().collect::<Vec<_>>(), ["sandwich", "thm2d"]);
}

#[test]
fn char_cap_downgrades_records() {
    let o = verify(&[
        "--max-order",
        "16",
        "--suite",
        "v-double-def",
        "--char-cap",
        "8",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let capped = report["records"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["status"] == "skipped-cap")
        .count();
    assert!(capped > 0);
    assert_eq!(
        report["summary"]["skippedCap"].as_u64().unwrap() as usize,
        capped
    );
}
