use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_parity-wilson");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("PARITY_WILSON_OUT_DIR").output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn poly_case_a_contains_seed() {
    let out = run(&["poly", "--case", "A", "--n", "3"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["entries"][1]["coeffs"][0], "-3/4");
    assert_eq!(v["entries"].as_array().unwrap().len(), 4);
}

#[test]
fn eigen_case_a_n2() {
    let out = run(&["eigen", "--case", "A", "--n", "2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["ell1"], 5);
    assert_eq!(v["alpha"], "8");
    assert_eq!(v["poly"], serde_json::json!(["0", "1", "1"]));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["frobnicate"],
        vec!["poly", "--case", "Q"],
        vec!["verify", "--suite", "nope"],
        vec!["lorentz", "--rep", "1,x"],
        vec!["eigen", "--case", "B", "--b", "abc"],
        vec!["poly", "--config", "/nonexistent/parity-wilson.conf"],
    ] {
        let out = run(&args);
        assert_eq!(code(&out), 2, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn computation_failure_exits_one() {
    // sqrt(B+1) = 2 makes the case B prefactor singular
    let out = run(&["eigen", "--case", "B", "--b", "3", "--n", "2"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("degenerate"));
}

#[test]
fn verify_exit_code_follows_checks() {
    let out = run(&["verify", "--suite", "tables"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["passed"], true);

    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("strict.conf");
    std::fs::write(&cfg, "# impossible quadrature tolerance\nquad_check_tol = 1e-300\n").unwrap();
    let out = run(&["verify", "--suite", "norms", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["passed"], false);
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["id"] == "norm-a" && c["status"] == "fail"));
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = run(&["coeffs", "--case", "A", "--n-max", "4", "--out", p.to_str().unwrap()]);
        assert_eq!(code(&out), 0);
        assert!(out.stdout.is_empty());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn flags_override_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    std::fs::write(&cfg, "format = csv\ncase = B\nb = 1/2\nn_max = 2\n").unwrap();
    let c = cfg.to_str().unwrap();

    let out = run(&["poly", "--config", c]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("n,power,coeff\n"));
    assert_eq!(text.lines().count(), 1 + 1 + 2 + 3);

    let out = run(&["poly", "--config", c, "--format", "json", "--case", "A", "--n", "1"]);
    assert_eq!(json(&out)["case"], "A");
}

#[test]
fn out_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(BIN)
        .args(["traceability"])
        .env("PARITY_WILSON_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let written = dir.path().join("traceability.json");
    let v: Value = serde_json::from_slice(&std::fs::read(written).unwrap()).unwrap();
    assert!(v.as_array().unwrap().iter().any(|r| r["equation"] == "A3"));
}

fn csv_rows(path: &Path) -> Vec<String> {
    std::fs::read_to_string(path).unwrap().lines().map(String::from).collect()
}

#[test]
fn every_subcommand_supports_csv_and_out() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[&[&str]] = &[
        &["poly", "--case", "B", "--b", "symbolic", "--n", "2"],
        &["eigen", "--case", "B", "--b", "3/2", "--n", "3"],
        &["residual", "--case", "A", "--n", "3"],
        &["second-solution", "--n", "1"],
        &["coeffs", "--case", "B", "--b", "1.5", "--n-max", "3"],
        &["reconstruct", "--case", "A", "--n-max", "4"],
        &["lorentz", "--rep", "1,0"],
        &["scan", "--b", "0", "--n", "1"],
        &["verify", "--suite", "lorentz"],
        &["traceability"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let path = dir.path().join(format!("{i}.csv"));
        let mut full: Vec<&str> = args.to_vec();
        full.extend(["--format", "csv", "--out", path.to_str().unwrap()]);
        let out = run(&full);
        assert_eq!(code(&out), 0, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        let rows = csv_rows(&path);
        assert!(rows.len() >= 2, "{args:?}");
        let width = rows[0].split(',').count();
        assert!(width >= 2, "{args:?}");
    }
}

#[test]
fn doubles_carry_seventeen_digits() {
    let out = run(&["residual", "--case", "A", "--n", "1", "--w", "2.5"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"W\":2.5000000000000000e0"), "{text}");
}
