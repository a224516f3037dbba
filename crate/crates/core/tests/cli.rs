use std::path::PathBuf;
use std::process::{Command, Output};

use liebider::cli::format::parse_algebra_file;
use liebider::cli::registry::Instance;
use serde_json::Value;

fn liebider(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liebider")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

#[test]
fn validate_builtins() {
    for name in ["sl2", "oscillator:1", "sl21"] {
        let o = liebider(&["validate", "--builtin", name]);
        assert!(o.status.success(), "{name}: {}", stdout(&o));
    }
}

#[test]
fn broken_jacobi_names_the_triple() {
    let o = liebider(&["validate", "--file", &fixture("broken_sl2.alg")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL algebra axioms"));
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    liebider(&["validate", "--file", &fixture("broken_sl2.alg"), "--json", json.to_str().unwrap()]);
    let report: Value = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(report["pass"], Value::Bool(false));
    assert_eq!(report["checks"][0]["detail"]["violations"][0], "Jacobi (e, h, f)");
}

#[test]
fn file_representations_are_checked() {
    let o = liebider(&["validate", "--file", &fixture("sl2_natural.alg")]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("PASS representation natural"));

    let text = std::fs::read_to_string(fixture("sl2_natural.alg")).unwrap().replace("m 2 1 0 1/1", "m 2 1 0 2/1");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.alg");
    std::fs::write(&path, text).unwrap();
    let o = liebider(&["validate", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL representation natural"));

    let o = liebider(&["bider", "--file", &fixture("sl2_natural.alg"), "--rep", "natural", "--mode", "symmetric"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("dimension: 0\n"));
}

#[test]
fn parse_errors_report_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.alg");
    std::fs::write(&path, "algebra a dim 2\nb 0 1 one 1/1\n").unwrap();
    let o = liebider(&["validate", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2, column 7"));
}

#[test]
fn bider_dimensions() {
    for (args, dim) in [
        (vec!["--builtin", "sl2", "--rep", "adjoint", "--mode", "symmetric"], 0),
        (vec!["--builtin", "reductive-sl2", "--rep", "adjoint", "--mode", "symmetric"], 1),
        (vec!["--builtin", "sl21", "--mode", "super-symmetric", "--parity", "even"], 0),
        (vec!["--builtin", "sl2", "--rep", "irrep:2", "--mode", "skew"], 1),
        (vec!["--builtin", "heisenberg:1", "--mode", "full"], 12),
    ] {
        let o = liebider(&[&["bider"], args.as_slice()].concat());
        assert!(o.status.success(), "{args:?}");
        assert!(stdout(&o).starts_with(&format!("dimension: {dim}\n")), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn invalid_mode_parity_combinations() {
    for args in [
        vec!["--builtin", "sl21", "--mode", "symmetric", "--parity", "even"],
        vec!["--builtin", "sl21", "--mode", "super-symmetric"],
        vec!["--builtin", "sl2", "--mode", "super-symmetric"],
        vec!["--builtin", "sl2", "--mode", "skew", "--parity", "odd"],
        vec!["--builtin", "sl2", "--mode", "sideways"],
        vec!["--builtin", "sl2", "--rep", "irrep:x"],
        vec!["--builtin", "nope"],
    ] {
        let o = liebider(&[&["bider"], args.as_slice()].concat());
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn der_and_h1() {
    let o = liebider(&["der", "--builtin", "heisenberg:1", "--rep", "trivial"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("der: 2\ninner: 0\nh1: 2\n"));
    let o = liebider(&["h1", "--builtin", "sp4"]);
    assert!(stdout(&o).starts_with("0\n"));
}

#[test]
fn suites_and_report_schema() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("whitehead.json");
    let o = liebider(&["suite", "whitehead", "--jobs", "2", "--json", json.to_str().unwrap()]);
    assert!(o.status.success());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    for key in ["instance", "checks", "pass", "timing"] {
        assert!(report.get(key).is_some());
    }
    let names: Vec<&str> = report["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names[0], "h1(sl2, irrep:0)");
    assert_eq!(names[8], "h1(sp4, adjoint)");
    assert_eq!(liebider(&["suite", "nope"]).status.code(), Some(2));
}

#[test]
fn suite_order_is_independent_of_jobs() {
    let one = liebider(&["suite", "oracle", "--jobs", "1"]);
    let many = liebider(&["suite", "oracle", "--jobs", "4"]);
    let strip = |o: &Output| stdout(o).lines().filter(|l| l.starts_with("  ")).map(String::from).collect::<Vec<_>>();
    assert_eq!(strip(&one), strip(&many));
}

#[test]
fn export_round_trips_every_builtin() {
    let dir = tempfile::tempdir().unwrap();
    for name in
        ["sl2", "sl3", "sp4", "heisenberg:2", "takiff:sl2", "reductive-sl2", "oscillator:1", "sl21", "abelian:3"]
    {
        let path = dir.path().join("out.alg");
        let o = liebider(&["export", "--builtin", name, "--out", path.to_str().unwrap()]);
        assert!(o.status.success());
        let back = parse_algebra_file(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(back.algebra, Instance::builtin(name).unwrap().algebra, "{name}");
        assert!(liebider(&["validate", "--file", path.to_str().unwrap()]).status.success());
    }
}
