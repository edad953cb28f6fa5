//! End-to-end runs of the `spinkin` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn spinkin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinkin")).args(args).env_remove("SPINKIN_SEED").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn read_json(path: &std::path::Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn verify_d5_n5_seed7_passes() {
    let o = spinkin(&["verify", "--d", "5", "--n", "5", "--suite", "all", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn k3_dimension_at_5_5() {
    let o = spinkin(&["dimension", "--variety", "k3", "--d", "5", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "13");
}

#[test]
fn json_artifacts_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for path in [&a, &b] {
        let o = spinkin(&["--json", path.to_str().unwrap(), "verify", "--d", "4", "--n", "5", "--seed", "11"]);
        assert_eq!(o.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let v = read_json(&a);
    assert_eq!(v["manifest"]["seed"], 11);
    assert_eq!(v["manifest"]["checks_failed"], 0);
    assert!(v["manifest"].get("timing_seconds").is_none());
}

#[test]
fn seed_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    let o = Command::new(env!("CARGO_BIN_EXE_spinkin"))
        .args(["--json", path.to_str().unwrap(), "sample", "--d", "4", "--n", "5"])
        .env("SPINKIN_SEED", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(read_json(&path)["result"], read_json(&fixture("sample_d4_n5_seed3.json"))["result"]);
}

#[test]
fn frozen_sample_and_brackets() {
    let dir = tempfile::tempdir().unwrap();
    let sample = dir.path().join("sample.json");
    let o = spinkin(&["--json", sample.to_str().unwrap(), "sample", "--d", "4", "--n", "5", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(read_json(&sample), read_json(&fixture("sample_d4_n5_seed3.json")));

    let brackets = dir.path().join("brackets.json");
    let input = fixture("sample_d4_n5_seed3.json");
    let o = spinkin(&["--json", brackets.to_str().unwrap(), "brackets", "--input", input.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(read_json(&brackets), read_json(&fixture("brackets_d4_n5_seed3.json")));
}

#[test]
fn hand_computed_d3_bracket() {
    // p = (1, 1, 0), q = (5/4, 3/4, 1), z = (1, 0): ⟨12⟩ = p3(q1+q2) − (p1+p2)q3 = −2.
    let input = fixture("d3_pair.json");
    let o = spinkin(&["brackets", "--input", input.to_str().unwrap(), "--word", "1,2", "--word", "2,1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("⟨1 2⟩ = -2"), "{out}");
    assert!(out.contains("⟨2 1⟩ = 2"), "{out}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(spinkin(&["sample", "--d", "4", "--n", "3"]).status.code(), Some(2));
    assert_eq!(spinkin(&["sample", "--d", "4", "--n", "5", "--isotropic"]).status.code(), Some(2));
    assert_eq!(spinkin(&["dimension", "--variety", "k4", "--d", "5"]).status.code(), Some(2));
    assert_eq!(spinkin(&["brackets"]).status.code(), Some(2));
    assert_eq!(spinkin(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn isotropic_triple_sample() {
    let o = spinkin(&["sample", "--d", "5", "--n", "3", "--isotropic"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("p3"));
}

#[test]
fn report_summarizes_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("v.json");
    assert_eq!(spinkin(&["--json", path.to_str().unwrap(), "verify", "--d", "3", "--n", "4", "--suite", "brackets"]).status.code(), Some(0));
    let o = spinkin(&["report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).is_empty());
}

#[test]
fn dirac_and_conjugation_print() {
    let o = spinkin(&["dirac", "--d", "4", "--momentum", "1,1,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    let o = spinkin(&["conjugation", "--d", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("symmetric"));
}
