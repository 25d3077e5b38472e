use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn groups_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../groups")
}

fn group(name: &str) -> PathBuf {
    groups_dir().join(format!("{name}.json"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_doubleaut"))
        .args(args)
        .env_remove("DOUBLEAUT_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn analyze_q8_full() {
    let q8 = group("q8");
    let out = run(&["analyze", path_str(&q8), "--verify", "full", "--no-cache"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let r = json_of(&out);
    assert_eq!(r["order"], 3072);
    assert_eq!(r["order_is_exact"], true);
    assert_eq!(r["verification"]["failed"], 0);
    assert_eq!(r["orbit_summary"]["labels"], 22);
}

#[test]
fn analyze_d8_and_trivial() {
    let out = run(&["analyze", path_str(&group("d8")), "--no-cache"]);
    assert!(out.status.success());
    let r = json_of(&out);
    assert_eq!(r["order"], 1024);
    assert_eq!(r["predicates"]["stem"], true);
    let out = run(&["analyze", path_str(&group("trivial")), "--no-cache"]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["order"], 1);
}

#[test]
fn orbit_reports() {
    let r = json_of(&run(&["orbits", path_str(&group("s3")), "--no-cache"]));
    assert_eq!(r["labels"].as_array().unwrap().len(), 8);
    assert_eq!(r["orbits"].as_array().unwrap().len(), 7);
    let r = json_of(&run(&["orbits", path_str(&group("z2")), "--no-cache"]));
    assert_eq!(r["labels"].as_array().unwrap().len(), 4);
    assert_eq!(r["orbits"].as_array().unwrap().len(), 2);
    let r = json_of(&run(&["orbits", path_str(&group("q8")), "--no-cache"]));
    assert_eq!(r["labels"].as_array().unwrap().len(), 22);
    assert!(!r["orbits"].as_array().unwrap().is_empty());
}

#[test]
fn verify_passes_on_q8() {
    let out = run(&["verify", path_str(&group("q8")), "--no-cache"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json_of(&out)["verification"]["failed"], 0);
}

#[test]
fn injected_quadruple_names_the_failing_relation() {
    let out = run(&[
        "verify",
        path_str(&group("s3")),
        "--inject",
        path_str(&fixture("s3_noncompatible.json")),
        "--verify",
        "none",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("v-p conjugation"), "{stderr}");
    let r = json_of(&out);
    assert_eq!(r["verification"]["checks"][0]["name"], "injected");
    assert_eq!(r["verification"]["checks"][0]["failed"], 1);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"table\": [[0, 1], [1,").unwrap();
    let out = run(&["analyze", path_str(&bad), "--no-cache"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));

    let out = run(&["analyze", path_str(&group("q8")), "--max-order", "4", "--no-cache"]);
    assert_eq!(out.status.code(), Some(3));

    let out = run(&["analyze"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_deterministic_and_cache_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let d8 = group("d8");
    let fresh = run(&["analyze", path_str(&d8), "--no-cache"]).stdout;
    let again = run(&["analyze", path_str(&d8), "--no-cache"]).stdout;
    assert_eq!(fresh, again);
    let miss = run(&["analyze", path_str(&d8), "--cache-dir", path_str(&cache)]).stdout;
    let entries = std::fs::read_dir(&cache).unwrap().count();
    assert_eq!(entries, 1);
    let hit = run(&["analyze", path_str(&d8), "--cache-dir", path_str(&cache)]).stdout;
    assert_eq!(miss, fresh);
    assert_eq!(hit, fresh);
}

#[test]
fn report_file_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.json");
    let out = run(&["classify", path_str(&group("s3")), "--report", path_str(&path), "--no-cache"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["classification"], "purely-nonabelian");
    assert_eq!(r["group"]["order"], 6);
}
