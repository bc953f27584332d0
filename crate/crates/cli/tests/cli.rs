//! End-to-end checks of the command-line surface: exit codes, formats,
//! determinism, and the cache lifecycle.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_shuffle-spectra"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn spectra_n1_single_row() {
    let (code, stdout, _) = run(&["spectra", "type-a", "--n", "1", "--family", "columns"]);
    assert_eq!(code, 0);
    // one row: the trivial module with the identity operator family empty
    assert_eq!(stdout.lines().count(), 2); // header + one row
}

#[test]
fn spectra_n3_markdown_matches_expected_rows() {
    let (code, stdout, _) = run(&[
        "spectra", "type-a", "--n", "3", "--family", "columns", "--format", "md",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("| 6 | 9 | 1 | 1 | · | · |"));
    assert!(stdout.contains("| · | 4 | -1 |"));
    assert!(stdout.contains("| · | 1 | -1 |"));
}

#[test]
fn spectra_json_schema_field() {
    let (code, stdout, _) = run(&[
        "spectra", "type-a", "--n", "3", "--family", "two-blocks", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(value["schema"], 1);
    assert_eq!(value["n"], 3);
    assert_eq!(value["family"], "two-blocks");
    assert!(value["rows"].as_array().unwrap().len() == 3);
}

#[test]
fn spectra_output_is_deterministic() {
    let first = run(&["spectra", "type-a", "--n", "4", "--family", "columns"]);
    let second = run(&["spectra", "type-a", "--n", "4", "--family", "columns"]);
    assert_eq!(first, second);
}

#[test]
fn large_n_needs_flag() {
    let (code, _, stderr) = run(&["spectra", "type-a", "--n", "7", "--family", "columns"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("--allow-large"));
}

#[test]
fn rank_one_h3_line() {
    let (code, stdout, _) = run(&["spectra", "rank-one", "--type", "H3", "--format", "tsv"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("(x^2-248x+3856)^3 (x-24)^4 (x-12)^5"));
}

#[test]
fn rank_one_e7_needs_flag() {
    let (code, _, stderr) = run(&["spectra", "rank-one", "--type", "E7"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("--allow-long"));
}

#[test]
fn rank_one_b2_counterexample_exit_code() {
    // irreducible quadratic factors are an integrality finding: exit 2
    let (code, stdout, _) = run(&["spectra", "rank-one", "--type", "B2", "--orbit", "all"]);
    assert_eq!(code, 2);
    assert!(stdout.contains("(x^2-8x+8)^2 (x-16) (x)^3"));
}

#[test]
fn unknown_type_is_usage_error() {
    let (code, _, _) = run(&["spectra", "rank-one", "--type", "Q9"]);
    assert_eq!(code, 1);
}

#[test]
fn verify_factorizations_small() {
    let (code, stdout, _) = run(&["verify", "--suite", "factorizations", "--n", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("PASS"));
}

#[test]
fn verify_unknown_suite() {
    let (code, _, stderr) = run(&["verify", "--suite", "nonsense"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("unknown suite"));
}

#[test]
fn verify_json_format() {
    let (code, stdout, _) = run(&[
        "verify", "--suite", "derangements", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(value["schema"], 1);
    assert_eq!(value["pass"], true);
}

#[test]
fn cache_lifecycle_is_idempotent() {
    let dir = std::env::temp_dir().join(format!("spectra-cache-test-{}", std::process::id()));
    let dirstr = dir.to_str().unwrap();
    let (code, _, _) = run(&["cache", "build", "--n", "4", "--dir", dirstr]);
    assert_eq!(code, 0);
    let first = std::fs::read(dir.join("seminormal_4.json")).unwrap();
    let (code, _, _) = run(&["cache", "build", "--n", "4", "--dir", dirstr]);
    assert_eq!(code, 0);
    let second = std::fs::read(dir.join("seminormal_4.json")).unwrap();
    assert_eq!(first, second, "rebuilds must be byte-identical");
    let (code, stdout, _) = run(&["cache", "inspect", "--n", "4", "--dir", dirstr]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 5);
    assert!(stdout.contains("dim 3"));
    let (code, stdout, _) = run(&["cache", "clear", "--dir", dirstr]);
    assert_eq!(code, 0);
    assert!(stdout.contains("removed 2"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn cache_env_var_is_honoured() {
    let dir = std::env::temp_dir().join(format!("spectra-cache-env-{}", std::process::id()));
    let out = bin()
        .args(["cache", "build", "--n", "3"])
        .env("SHUFFLE_SPECTRA_CACHE", &dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.join("chartable_3.json").exists());
    std::fs::remove_dir_all(&dir).ok();
}
