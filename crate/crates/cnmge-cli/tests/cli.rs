//! End-to-end checks of the installed binary.

use std::process::Command;

fn cnmge_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cnmge"))
}

#[test]
fn branin_json_reports_solved() {
    let out = cnmge_bin()
        .args(["--problem", "branin", "--format", "json"])
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "exit: {:?}", out.status);
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let row = &parsed[0];
    assert_eq!(row["problem"], "branin");
    assert_eq!(row["status"], "solved");
    let f_min = row["f_min"].as_f64().unwrap();
    assert!((f_min - 0.39789).abs() < 1e-4, "f_min = {f_min}");
}

#[test]
fn rastrigin_dim_override() {
    let out = cnmge_bin()
        .args(["--problem", "rastrigin", "--dim", "100", "--format", "json"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(parsed[0]["n"], 100);
    let f_min = parsed[0]["f_min"].as_f64().unwrap();
    assert!(f_min.abs() <= 1e-6, "f_min = {f_min}");
}

#[test]
fn unknown_problem_exits_2_with_name_list() {
    let out = cnmge_bin()
        .args(["--problem", "no-such-thing"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("valid problem names"));
    assert!(err.contains("branin"));
}

#[test]
fn usage_error_without_selection() {
    let out = cnmge_bin().output().expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn list_prints_catalog() {
    let out = cnmge_bin().arg("--list").output().expect("binary runs");
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.lines().count() >= 30);
    assert!(stdout.contains("molecular-energy"));
}

#[test]
fn seed_dump_writes_stationary_points() {
    let dir = std::env::temp_dir().join("cnmge-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("seeds.json");
    let out = cnmge_bin()
        .args([
            "--problem",
            "six-hump-camel",
            "--format",
            "csv",
            "--seed-dump",
            path.to_str().unwrap(),
        ])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let dump: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(dump[0]["problem"], "six-hump-camel");
    let points = dump[0]["points"].as_array().unwrap();
    assert!(!points.is_empty());
    assert_eq!(
        points.len(),
        dump[0]["f_values"].as_array().unwrap().len()
    );
}

#[test]
fn max_stationary_caps_enumeration() {
    let out = cnmge_bin()
        .args([
            "--problem",
            "drop-wave",
            "--max-stationary",
            "2",
            "--format",
            "json",
        ])
        .output()
        .expect("binary runs");
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let count = parsed[0]["stationary_count"].as_u64().unwrap();
    assert!(count <= 8, "cap 2 per start but found {count}");
}
