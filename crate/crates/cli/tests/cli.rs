use std::process::{Command, Output};

use serde_json::Value;

fn superq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superq")).args(args).env_remove("SUPERQ_CAP_N").output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

#[test]
fn rmatrix_verify_at_three() {
    let out = superq(&["rmatrix", "verify", "--d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["pass"], true);
    let names: Vec<&str> = r["checks"].as_array().unwrap().iter().map(|c| c["check"].as_str().unwrap()).collect();
    for want in ["forms_agree", "quasi_cocommutative", "coproduct_left", "coproduct_right", "inverse"] {
        assert!(names.contains(&want), "missing {want} in {names:?}");
    }
}

#[test]
fn basis_at_two() {
    let out = superq(&["centralizer", "basis", "--d", "5", "--mu", "1", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["artifact"]["words"], serde_json::json!([[], [1], [1, 1]]));
    assert_eq!(r["params"]["n"], 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(superq(&["rep", "check", "--d", "5", "--mu", "0"]).status.code(), Some(2));
    assert_eq!(superq(&["rep", "check", "--d", "4", "--mu", "1"]).status.code(), Some(2));
    assert_eq!(superq(&["centralizer", "basis", "--d", "5", "--mu", "1", "--n", "5"]).status.code(), Some(2));
    assert_eq!(superq(&["hopf", "verify"]).status.code(), Some(2));
    assert_eq!(superq(&["rmatrix", "--d", "3"]).status.code(), Some(2));
}

#[test]
fn check_failure_exits_one() {
    // roots of g1 collide at mu = (d-1)/2, so the braid image misses part of the commutant
    let out = superq(&["centralizer", "commutant", "--d", "5", "--mu", "2", "--n", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["pass"], false);
    assert_eq!(r["artifact"]["dim"]["dim"], 20);
    assert_eq!(r["artifact"]["basis_size"], 15);
}

#[test]
fn reports_are_deterministic() {
    let args = ["hopf", "verify", "--d", "5", "--samples", "20", "--seed", "7"];
    let a = superq(&args);
    let b = superq(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn rep_check_passes() {
    let out = superq(&["rep", "check", "--d", "7", "--mu", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn c_matrix_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("c.json");
    let csv_path = dir.path().join("c.csv");
    for p in [&json_path, &csv_path] {
        let out = superq(&["rep", "c-matrix", "--d", "5", "--mu", "1", "--out", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    let m: superq::rep::MatrixJson = serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    let from_json = m.to_matrix().unwrap();
    let rc = superq::rep::RepContext::new(5, 1).unwrap();
    let from_csv = superq::rep::from_csv(rc.ctx(), 16, &std::fs::read_to_string(&csv_path).unwrap()).unwrap();
    assert!(from_json == from_csv);
    assert!(from_json == superq::rep::c_matrix(&rc).unwrap());
}

#[test]
fn rmatrix_export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = superq(&["rmatrix", "--d", "3", "--form", "mult", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let json: superq::double::RMatrixJson = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let r = superq::double::RMatrix::from_json(&json).unwrap();
    assert!(r.tensor() == superq::double::r_coefficient(3).unwrap().tensor());
}

#[test]
fn report_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let args = ["braid", "verify", "--d", "5", "--mu", "1", "--n", "3"];
    let stdout = superq(&args);
    let mut with_out = args.to_vec();
    let p = path.to_str().unwrap();
    with_out.extend(["--out", p]);
    let file = superq(&with_out);
    assert_eq!(file.status.code(), Some(0));
    assert!(file.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), stdout.stdout);
}
