use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn configs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qindirect"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn cfg(name: &str) -> String {
    configs().join(name).to_string_lossy().into_owned()
}

fn json_ok(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

fn write_temp(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn classify_ising_preset() {
    let v = json_ok(&["classify", &cfg("ising.json")]);
    assert_eq!(v["case"], "1b");
    assert_eq!(v["predicted_dim"], 10);
    assert_eq!(v["computed_dim"], 10);
    assert_eq!(v["agree"], true);
    assert_eq!(v["tolerances"]["rank"], 1e-9);
    assert_eq!(v["tolerances"]["eq"], 1e-12);
}

#[test]
fn classify_single_axis_reports_both_conditions() {
    let v = json_ok(&["classify", &cfg("single_axis.json")]);
    assert_eq!(v["cc"], true);
    assert_eq!(v["computed_dim"], 15);
    assert_eq!(v["forms_agree"], true);
}

#[test]
fn closure_with_basis() {
    let v = json_ok(&["closure", &cfg("ising.json"), "--basis"]);
    assert_eq!(v["dim"], 10);
    let basis = v["basis"].as_array().unwrap();
    assert_eq!(basis.len(), 10);
    assert_eq!(basis[0].as_array().unwrap().len(), 4);
    assert!(json_ok(&["closure", &cfg("ising.json")]).get("basis").is_none());
}

#[test]
fn negat_excludes_case_1c_with_exit_zero() {
    let v = json_ok(&["negat", &cfg("case1c_negat.json")]);
    assert_eq!(v["uic_excluded"], true);
    assert!(v["trace_image_dim"].as_u64().unwrap() <= 2);
    assert!(v.get("tolerances").is_some());
}

#[test]
fn negat_maximally_mixed_is_precondition_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_temp(
        &dir,
        "m.json",
        r#"{"omega_S":1,"K":[[0,0,0],[0,1,0],[0,0,0]],"control":{"type":"full"},"rho_S":[0,0,0],"rho_A":[0,0,1]}"#,
    );
    assert_eq!(run(&["negat", &p]).status.code(), Some(2));
}

#[test]
fn malformed_inputs_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let unknown = write_temp(&dir, "u.json", r#"{"omega_S":1,"K":[[1,0,0],[0,0,0],[0,0,0]],"control":{"type":"full"},"extra":1}"#);
    assert_eq!(run(&["classify", &unknown]).status.code(), Some(1));
    let broken = write_temp(&dir, "b.json", "{");
    assert_eq!(run(&["classify", &broken]).status.code(), Some(1));
    let zero_k = write_temp(&dir, "z.json", r#"{"omega_S":1,"K":[[0,0,0],[0,0,0],[0,0,0]],"control":{"type":"full"}}"#);
    assert_eq!(run(&["classify", &zero_k]).status.code(), Some(1));
    assert_eq!(run(&["classify", "/nonexistent/file.json"]).status.code(), Some(1));
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--tol-rank", "-1"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn wrong_control_for_single_axis_test_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_temp(&dir, "m.json", r#"{"omega_S":0.5,"K":[[1,0,0],[0,1,0],[0,0,1]],"control":{"type":"axis","n":[0,0,1]}}"#);
    assert_eq!(run(&["classify", &p]).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let v = json_ok(&["verify", "--draws", "100", "--seed", "7"]);
    assert!(v["max_residual"].as_f64().unwrap() < 1e-12);
    assert_eq!(v["pass"], true);
    assert_eq!(v["draws"], 100);
    let from_file = json_ok(&["verify", &cfg("verify.json")]);
    assert_eq!(v, from_file);
}

#[test]
fn steer_and_fic_residuals() {
    let v = json_ok(&["steer", &cfg("steer.json")]);
    assert!(v["max_residual"].as_f64().unwrap() < 1e-10);
    let v = json_ok(&["steer", "--draws", "50", "--seed", "3"]);
    assert!(v["max_residual"].as_f64().unwrap() < 1e-10);
    let v = json_ok(&["fic", &cfg("fic.json")]);
    assert!(v["max_residual"].as_f64().unwrap() < 1e-8);
    let v = json_ok(&["fic", "--draws", "20"]);
    assert!(v["max_eigenvalue_error"].as_f64().unwrap() < 1e-8);
}

#[test]
fn mixed_accessor_cannot_be_prepared() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_temp(&dir, "s.json", r#"{"rho_S":[0,0,0.5],"rho_A":[0,0,0.5],"X":[[[1,0],[0,0]],[[0,0],[1,0]]]}"#);
    assert_eq!(run(&["steer", &p]).status.code(), Some(2));
}

fn sample_csv(config: &str, extra: &[&str]) -> String {
    let mut args = vec!["sample", config];
    args.extend_from_slice(extra);
    let out = run(&args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn rows(csv: &str) -> Vec<[f64; 3]> {
    csv.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| {
            let v: Vec<f64> = l.split(',').map(|f| f.parse().unwrap()).collect();
            [v[0], v[1], v[2]]
        })
        .collect()
}

#[test]
fn sample_figure_two_is_on_the_axis() {
    let csv = sample_csv(&cfg("fig2.json"), &[]);
    assert!(csv.starts_with("# seed=2\nx,y,z\n"));
    let pts = rows(&csv);
    assert_eq!(pts.len(), 729);
    assert!(pts.iter().all(|p| p[0].abs() < 1e-10 && p[1].abs() < 1e-10));
}

#[test]
fn sample_is_deterministic_and_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let out = run(&["sample", &cfg("fig1.json"), "--seed", "11", "-o", &p.to_string_lossy()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let text = String::from_utf8(ta).unwrap();
    assert!(text.starts_with("# seed=11\n"));
    let parsed = qubit_indirect_cli::points::read_points(text.as_bytes()).unwrap();
    assert_eq!(parsed.len(), 729);
    assert!(parsed.iter().any(|p| p.norm() > 0.5 + 1e-6));
}

#[test]
fn sample_grid_mode_and_bad_state() {
    let dir = tempfile::tempdir().unwrap();
    let grid = write_temp(
        &dir,
        "g.json",
        r#"{"seed":1,"sample":{"s_x":0.5,"s_z":0,"a_z":0,"n":30,"mode":"grid","verify_product":true}}"#,
    );
    let pts = rows(&sample_csv(&grid, &[]));
    assert_eq!(pts.len(), 30);
    assert!(pts.iter().all(|p| p[2].abs() < 1e-10));
    let bad = write_temp(&dir, "bad.json", r#"{"sample":{"s_x":0.9,"s_z":0.9,"a_z":0}}"#);
    assert_eq!(run(&["sample", &bad]).status.code(), Some(1));
}
