use std::process::{Command, Output};

use serde_json::Value;

fn otsuki(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_otsuki"))
        .args(args)
        .env_remove("OTSUKI_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn csv_rows(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(str::to_owned).collect();
    let rows = lines.map(|l| l.split(',').map(str::to_owned).collect()).collect();
    (header, rows)
}

#[test]
fn solve_hits_the_target_angle() {
    let out = otsuki(&["solve", "--n", "2", "--p", "2", "--s", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let (header, rows) = csv_rows(&stdout(&out));
    assert_eq!(header.join(","), "p,s,a,T,K,w,area,entropy,clifford_ratio");
    assert_eq!(rows.len(), 1);
    let k: f64 = rows[0][4].parse().unwrap();
    assert!((k - 4.0 * std::f64::consts::PI / 3.0).abs() < 1e-10);
}

#[test]
fn catalog_up_to_five_folds() {
    let out = otsuki(&["catalog", "--n", "2", "--max-s", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let (_, rows) = csv_rows(&stdout(&out));
    let specs: Vec<(&str, &str)> = rows.iter().map(|r| (r[0].as_str(), r[1].as_str())).collect();
    assert_eq!(specs, [("2", "3"), ("3", "5")]);
}

#[test]
fn csv_and_json_carry_the_same_numbers() {
    let csv = stdout(&otsuki(&["catalog", "--n", "3", "--max-s", "7"]));
    let json: Value = serde_json::from_str(&stdout(&otsuki(&[
        "catalog", "--n", "3", "--max-s", "7", "--format", "json",
    ])))
    .unwrap();
    assert_eq!(json["n"], 3);
    assert_eq!(json["command"], "catalog");
    let (header, rows) = csv_rows(&csv);
    let json_rows = json["rows"].as_array().unwrap();
    assert_eq!(rows.len(), json_rows.len());
    for (row, object) in rows.iter().zip(json_rows) {
        let keys: Vec<&String> = object.as_object().unwrap().keys().collect();
        assert_eq!(keys, header.iter().collect::<Vec<_>>());
        for (name, cell) in header.iter().zip(row) {
            let from_csv: f64 = cell.parse().unwrap();
            assert_eq!(from_csv, object[name].as_f64().unwrap(), "column {name}");
        }
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["scan", "--n", "3", "--grid-steps", "25"];
    let first = otsuki(&args);
    let second = otsuki(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn thread_count_does_not_change_results() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_otsuki"))
            .args(["scan", "--n", "2", "--grid-steps", "16"])
            .env("OTSUKI_THREADS", threads)
            .output()
            .unwrap()
    };
    let one = run("1");
    let four = run("4");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(run("zero").status.code(), Some(2));
}

#[test]
fn scan_range_defaults() {
    let (header, rows) = csv_rows(&stdout(&otsuki(&["scan", "--n", "2", "--grid-steps", "5"])));
    assert_eq!(header.join(","), "a,T,K,w,area,entropy,clifford_ratio");
    assert_eq!(rows.len(), 5);
    let first: f64 = rows[0][0].parse().unwrap();
    let last: f64 = rows[4][0].parse().unwrap();
    assert_eq!(first, 0.25 * 1e-6);
    assert_eq!(last, 0.25 * (1.0 - 1e-6));
}

#[test]
fn verify_theorem4_passes() {
    let out = otsuki(&["verify", "--n", "3", "--theorem", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let report = &doc["rows"][0];
    assert_eq!(report["claim"], "theorem4");
    assert_eq!(report["passed"], true);
    assert!(report["margin"].as_f64().unwrap() > 0.0);
}

#[test]
fn verify_bounds_passes() {
    let out = otsuki(&["verify", "--n", "2", "--theorem", "bounds"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("envelope_g1,true"));
    assert!(text.contains("envelope_g2,true"));
}

#[test]
fn loose_tolerance_is_refused() {
    let out = otsuki(&["verify", "--n", "2", "--theorem", "4", "--tol", "1e30"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_with_two() {
    let rotation = otsuki(&["solve", "--n", "2", "--p", "1", "--s", "1"]);
    assert_eq!(rotation.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&rotation.stderr).contains("1/2 < p/s < sqrt(2)/2"));
    assert_eq!(
        otsuki(&["profile", "--n", "3", "--export", "obj"]).status.code(),
        Some(2)
    );
    assert_eq!(otsuki(&["scan", "--n", "1"]).status.code(), Some(2));
    assert_eq!(otsuki(&["scan", "--n", "2", "--frobnicate"]).status.code(), Some(2));
    assert_eq!(otsuki(&["scan", "--n", "2", "--a-min", "0.3"]).status.code(), Some(2));
    assert_eq!(otsuki(&["catalog", "--n", "2", "--max-s", "2"]).status.code(), Some(2));
}

#[test]
fn help_exits_cleanly() {
    let out = otsuki(&["verify", "--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("--theorem"));
}

#[test]
fn profile_curve_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("curve.csv");
    let out = otsuki(&[
        "profile",
        "--n",
        "2",
        "--p",
        "2",
        "--s",
        "3",
        "--ode-steps",
        "2000",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("t,r,theta,alpha_x,alpha_y\n"));
    assert_eq!(text.lines().count(), 1 + 3 * 2000 + 1);
    let last: Vec<f64> = text
        .lines()
        .last()
        .unwrap()
        .split(',')
        .map(|v| v.parse().unwrap())
        .collect();
    assert!((last[2] - 4.0 * std::f64::consts::PI).abs() < 1e-5);
}

#[test]
fn profile_mesh_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("torus.obj");
    let out = otsuki(&[
        "profile",
        "--n",
        "2",
        "--p",
        "2",
        "--s",
        "3",
        "--export",
        "obj",
        "--circle-samples",
        "16",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# n=2 p=2 s=3 a="));
    let vertices = text.lines().filter(|l| l.starts_with("v ")).count();
    let faces = text.lines().filter(|l| l.starts_with("f ")).count();
    assert_eq!(faces, 2 * vertices);
}

#[test]
fn unwritable_output_is_a_failure() {
    let out = otsuki(&[
        "solve",
        "--n",
        "2",
        "--p",
        "2",
        "--s",
        "3",
        "--output",
        "/nonexistent/dir/out.csv",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn entropy_rows_and_precision() {
    let out = otsuki(&["entropy", "--n", "2", "--max-s", "5", "--precision", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("source,area,entropy,threshold,exceeds_threshold"));
    assert!(lines.next().unwrap().starts_with("round_sphere,12.5664,1.0,"));
    assert!(lines.next().unwrap().starts_with("clifford,19.7392,1.5708,"));
    assert!(text.contains("\"spec(2,3)\""));
}
