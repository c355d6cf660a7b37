//! End-to-end CLI checks through the real binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn vism(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vism"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("vism-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn solve_box_spectrum_csv() {
    let out = vism(&[
        "solve",
        "--potential", "0",
        "--mode", "confinement",
        "-N", "3",
        "--L", "1.0",
        "--precision", "30",
        "--states", "6",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("# potential: 0"));
    assert!(text.contains("# mode: confinement"));
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows.len(), 7); // header + 6 states
    // E_m = (mπ/2)² for L = 1
    for (i, row) in rows[1..].iter().enumerate() {
        let energy: f64 = row.split(',').nth(1).unwrap().parse().unwrap();
        let m = (i + 1) as f64;
        let want = (m * std::f64::consts::PI / 2.0).powi(2);
        assert!((energy - want).abs() < 1e-12 * want, "row {i}: {row}");
    }
}

#[test]
fn bad_potential_exits_2() {
    let out = vism(&["solve", "--potential", "x^^2", "-N", "4", "--L", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn low_precision_exits_2() {
    let out = vism(&[
        "solve", "--potential", "x^2", "-N", "4", "--L", "2", "--precision", "8",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_calibration_exits_2() {
    let out = vism(&[
        "solve", "--potential", "x^2 + x^6", "-N", "4", "--L", "auto",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("calibrate"));
}

#[test]
fn identical_configs_produce_identical_bytes() {
    let args = [
        "solve",
        "--potential", "x^2 + 0.1*x^4",
        "--mode", "periodic",
        "-N", "6",
        "--L", "3.5",
        "--precision", "35",
        "--states", "5",
        "--format", "json",
    ];
    let first = vism(&args);
    let second = vism(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn json_config_file_drives_solve() {
    let cfg = tmp("config.json");
    std::fs::write(
        &cfg,
        r#"{
  "potential": "0",
  "mode": "confinement",
  "n": 2,
  "l": "1.0",
  "precision": 25,
  "states": 2,
  "format": "json"
}"#,
    )
    .unwrap();
    let out = vism(&["solve", "--config", cfg.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["mode"], "confinement");
    assert_eq!(parsed["states"].as_array().unwrap().len(), 2);
    // explicit flag overrides the file
    let out = vism(&["solve", "--config", cfg.to_str().unwrap(), "--states", "3"]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["states"].as_array().unwrap().len(), 3);
    std::fs::remove_file(&cfg).ok();
}

#[test]
fn scan_flags_the_confinement_minimum() {
    let out = vism(&[
        "scan-l",
        "--potential", "x^2",
        "--mode", "confinement",
        "-N", "5",
        "--l-min", "2",
        "--l-max", "8",
        "--samples", "25",
        "--precision", "25",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("interior-minimum"), "{text}");
}

#[test]
fn scan_flags_the_periodic_inflection() {
    let out = vism(&[
        "scan-l",
        "--potential", "x^2",
        "--mode", "periodic",
        "-N", "5",
        "--l-min", "2",
        "--l-max", "8",
        "--samples", "25",
        "--precision", "25",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("inflection"), "{}", stdout(&out));
}

#[test]
fn scan_rejects_single_sample() {
    let out = vism(&[
        "scan-l",
        "--potential", "x^2",
        "-N", "5",
        "--l-min", "2",
        "--l-max", "8",
        "--samples", "1",
        "--precision", "25",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn two_dimensional_scan_covers_all_n() {
    let out = vism(&[
        "scan-l",
        "--potential", "x^2",
        "--mode", "periodic",
        "-N", "2,3",
        "--l-min", "2",
        "--l-max", "4",
        "--samples", "5",
        "--precision", "25",
        "--reference", "exact",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let n2 = text.lines().filter(|l| l.starts_with("2,")).count();
    let n3 = text.lines().filter(|l| l.starts_with("3,")).count();
    assert_eq!((n2, n3), (5, 5));
    // delta_e column filled
    let data_line = text.lines().find(|l| l.starts_with("2,")).unwrap();
    assert_eq!(data_line.split(',').count(), 4);
    assert!(!data_line.ends_with(','));
}

#[test]
fn calibrate_then_solve_auto_through_anchor_file() {
    let anchors = tmp("anchors.csv");
    let out = vism(&[
        "calibrate",
        "--potential", "x^2",
        "--method", "energy-min-confinement",
        "--n-list", "1,2,3,4",
        "--precision", "25",
        "--tol-l", "1e-6",
        "--out", anchors.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let table = std::fs::read_to_string(&anchors).unwrap();
    assert!(table.starts_with("N,L_hat,method,state_index"));
    assert!(table.contains("# power-law tail"));

    let out = vism(&[
        "solve",
        "--potential", "x^2",
        "--mode", "confinement",
        "-N", "3",
        "--L", "auto",
        "--precision", "30",
        "--states", "2",
        "--anchors", anchors.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    let e0: f64 = text
        .lines()
        .find(|l| l.starts_with("0,"))
        .unwrap()
        .split(',')
        .nth(1)
        .unwrap()
        .parse()
        .unwrap();
    assert!((e0 - 1.0).abs() < 5e-3, "E0 = {e0}");
    std::fs::remove_file(&anchors).ok();
}

#[test]
fn calibrate_empty_n_list_is_rejected() {
    let out = vism(&[
        "calibrate", "--potential", "x^2", "--n-list", "", "--precision", "25",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn calibrate_preserves_partial_output_on_failure() {
    // the box potential has no confinement minimum: every N fails, the
    // file still appears with the failures recorded
    let anchors = tmp("anchors-fail.csv");
    let out = vism(&[
        "calibrate",
        "--potential", "0",
        "--method", "energy-min-confinement",
        "--n-list", "2,3",
        "--precision", "25",
        "--tol-l", "1e-4",
        "--out", anchors.to_str().unwrap(),
    ]);
    // a numerical failure, not a configuration one
    assert_eq!(out.status.code(), Some(3));
    let text = std::fs::read_to_string(&anchors).unwrap();
    assert!(text.contains("# failed N=2"), "{text}");
    std::fs::remove_file(&anchors).ok();
}

#[test]
fn compare_quartic_against_perturbation() {
    let out = vism(&[
        "compare",
        "--potential", "x^2 + 0.1*x^4",
        "--reference", "perturbation1",
        "-N", "20",
        "--L", "7.0",
        "--precision", "30",
        "--states", "1",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    let row = text.lines().find(|l| l.starts_with("0,")).unwrap();
    let rel: f64 = row.split(',').nth(3).unwrap().parse().unwrap();
    assert!((rel - 0.00913).abs() < 5e-4, "relative difference {rel}");
}

#[test]
fn compare_rejects_mismatched_reference() {
    let out = vism(&[
        "compare",
        "--potential", "x^2 + 10*cos(10*pi*x)",
        "--reference", "perturbation1",
        "-N", "8",
        "--L", "4",
        "--precision", "30",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn psi_export_and_matrix_dump() {
    let psi = tmp("psi.csv");
    let matrix = tmp("matrix.csv");
    let out = vism(&[
        "solve",
        "--potential", "x^2",
        "--mode", "periodic",
        "-N", "4",
        "--L", "4.0",
        "--precision", "25",
        "--states", "1",
        "--psi-out", psi.to_str().unwrap(),
        "--psi-samples", "11",
        "--dump-matrix", matrix.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let psi_text = std::fs::read_to_string(&psi).unwrap();
    assert!(psi_text.starts_with("x,psi"));
    assert_eq!(psi_text.lines().count(), 12);
    let m_text = std::fs::read_to_string(&matrix).unwrap();
    assert_eq!(m_text.lines().count(), 8);
    assert!(m_text.lines().all(|l| l.split(',').count() == 8));
    std::fs::remove_file(&psi).ok();
    std::fs::remove_file(&matrix).ok();
}
