//! End-to-end tests of the `framecast` binary: exit codes, file formats,
//! determinism, and the documented command examples.

use framecast_core::spiral::{interval_exponential_frame, sinc};
use framecast_core::Complex64;
use serde_json::{json, Value};
use std::path::Path;
use std::process::{Command, Output};
use tempfile::TempDir;

fn framecast(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_framecast"))
        .args(args)
        .current_dir(dir)
        .env_remove("FRAMECAST_TOL")
        .output()
        .expect("binary runs")
}

fn assert_exit(out: &Output, code: i32) {
    assert_eq!(
        out.status.code(),
        Some(code),
        "stdout: {}\nstderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_frame_json(path: &Path, dim: usize, rows: &[Vec<Complex64>]) {
    let vectors: Vec<Vec<[f64; 2]>> = rows
        .iter()
        .map(|r| r.iter().map(|z| [z.re, z.im]).collect())
        .collect();
    let file = json!({
        "schema_version": "1",
        "dim": dim,
        "vectors": vectors,
    });
    std::fs::write(path, serde_json::to_string_pretty(&file).unwrap()).unwrap();
}

fn identity_frame_rows(n: usize) -> Vec<Vec<Complex64>> {
    (0..n)
        .map(|i| {
            let mut row = vec![Complex64::ZERO; n];
            row[i] = Complex64::ONE;
            row
        })
        .collect()
}

/// Frequencies 10/3, 17/4, 26/5, 37/6 used by the partition example.
const LAMBDAS: [f64; 4] = [10.0 / 3.0, 17.0 / 4.0, 26.0 / 5.0, 37.0 / 6.0];

fn exponential_rows(count: usize) -> Vec<Vec<Complex64>> {
    let ef = interval_exponential_frame(&LAMBDAS[..count], 0.5).unwrap();
    (0..count).map(|i| ef.frame.vector(i).to_vec()).collect()
}

/// Three exponentials plus their pairwise sums, in span coordinates.
fn six_vector_rows() -> Vec<Vec<Complex64>> {
    let base = exponential_rows(3);
    let mut rows = base.clone();
    for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
        rows.push(
            base[i]
                .iter()
                .zip(&base[j])
                .map(|(a, b)| a + b)
                .collect(),
        );
    }
    rows
}

#[test]
fn spiral_points_writes_self_validating_set() {
    let dir = TempDir::new().unwrap();
    let out = framecast(
        dir.path(),
        &[
            "spiral-points",
            "--c",
            "1",
            "--R",
            "0.25",
            "--delta",
            "0.25",
            "--count",
            "3",
            "--out",
            "pts.json",
        ],
    );
    assert_exit(&out, 0);
    let file: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("pts.json")).unwrap())
            .unwrap();
    let gaps = file["gaps"].as_array().unwrap();
    assert_eq!(gaps.len(), 3);
    for g in gaps {
        assert!(g.as_f64().unwrap() < 0.5);
    }
    assert_eq!(file["points"].as_array().unwrap().len(), 3);
    assert!(file["covering"]["rho_hat"].as_f64().unwrap() > 0.0);
}

#[test]
fn spiral_points_rejects_inadmissible_spec_with_named_inequality() {
    let dir = TempDir::new().unwrap();
    let out = framecast(
        dir.path(),
        &[
            "spiral-points",
            "--c",
            "1",
            "--R",
            "1",
            "--delta",
            "0.25",
            "--out",
            "pts.json",
        ],
    );
    assert_exit(&out, 2);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("R*c < 1/2"), "stderr: {stderr}");
}

#[test]
fn spiral_points_single_point_stays_within_start_budget() {
    let dir = TempDir::new().unwrap();
    let out = framecast(
        dir.path(),
        &[
            "spiral-points",
            "--c",
            "1",
            "--R",
            "0.25",
            "--delta",
            "0.25",
            "--count",
            "1",
            "--out",
            "pts.json",
        ],
    );
    assert_exit(&out, 0);
    let file: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("pts.json")).unwrap())
            .unwrap();
    let gaps = file["gaps"].as_array().unwrap();
    assert_eq!(gaps.len(), 1);
    assert!(gaps[0].as_f64().unwrap() < 0.5);
}

#[test]
fn parseval_of_identity_basis_is_identity() {
    let dir = TempDir::new().unwrap();
    write_frame_json(&dir.path().join("id.json"), 3, &identity_frame_rows(3));
    let out = framecast(
        dir.path(),
        &["parseval", "--in", "id.json", "--out", "pars.json"],
    );
    assert_exit(&out, 0);
    let report = stdout_json(&out);
    assert!(report["outputs"]["symmetric_distance_to_input"].as_f64().unwrap() < 1e-20);
    let file: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("pars.json")).unwrap())
            .unwrap();
    assert_eq!(file["vectors"][0][0][0], json!(1.0));
}

#[test]
fn parseval_of_six_vector_frame_reports_unit_bounds() {
    let dir = TempDir::new().unwrap();
    write_frame_json(&dir.path().join("six.json"), 3, &six_vector_rows());
    let out = framecast(
        dir.path(),
        &[
            "parseval",
            "--in",
            "six.json",
            "--out",
            "pars.json",
            "--emit-transfer",
            "transfer.csv",
        ],
    );
    assert_exit(&out, 0);
    let report = stdout_json(&out);
    for key in ["lower_frame_bound", "upper_frame_bound"] {
        let value = report["outputs"][key]["value"].as_f64().unwrap();
        assert!((value - 1.0).abs() <= 1e-9, "{key} = {value}");
        assert_eq!(report["outputs"][key]["pass"], json!(true));
    }
    assert_eq!(report["outputs"]["coisometry_defect"]["pass"], json!(true));

    // Transfer CSV: 6 rows of 6 complex entries plus a header.
    let csv = std::fs::read_to_string(dir.path().join("transfer.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[0].split(',').count(), 12);
}

#[test]
fn parseval_output_is_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    write_frame_json(&dir.path().join("six.json"), 3, &six_vector_rows());
    for out_name in ["a.json", "b.json"] {
        let out = framecast(
            dir.path(),
            &["parseval", "--in", "six.json", "--out", out_name],
        );
        assert_exit(&out, 0);
    }
    let a = std::fs::read(dir.path().join("a.json")).unwrap();
    let b = std::fs::read(dir.path().join("b.json")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn frame_file_round_trip_is_bit_exact() {
    let dir = TempDir::new().unwrap();
    // The identity basis converts to itself exactly (no rounding anywhere on
    // this path), so vectors written, read back, converted, and rewritten
    // must agree bit for bit.
    write_frame_json(&dir.path().join("id.json"), 3, &identity_frame_rows(3));
    let out = framecast(
        dir.path(),
        &["parseval", "--in", "id.json", "--out", "p1.json"],
    );
    assert_exit(&out, 0);
    let out = framecast(
        dir.path(),
        &["parseval", "--in", "p1.json", "--out", "p2.json"],
    );
    assert_exit(&out, 0);
    let p1: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("p1.json")).unwrap())
            .unwrap();
    let p2: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("p2.json")).unwrap())
            .unwrap();
    assert_eq!(p1["vectors"], p2["vectors"]);
}

#[test]
fn reconstruct_builtin_signals_hit_tolerance() {
    let dir = TempDir::new().unwrap();
    for (name, csv) in [("fig1", "fig1.csv"), ("fig2", "fig2.csv")] {
        let out = framecast(
            dir.path(),
            &["reconstruct", "--signal", name, "--out", csv],
        );
        assert_exit(&out, 0);
        let text = std::fs::read_to_string(dir.path().join(csv)).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(
            lines[0],
            "node_index,x,y,re_original,re_reconstructed,abs_error"
        );
        assert_eq!(lines.len(), 2502); // header + 2500 rows + summary
        let summary = lines.last().unwrap();
        let rel: f64 = summary.rsplit(',').next().unwrap().parse().unwrap();
        assert!(rel <= 1e-9, "{name}: relative error {rel:.3e}");
    }
}

#[test]
fn reconstruct_zero_signal_has_zero_error() {
    let dir = TempDir::new().unwrap();
    write_frame_json(&dir.path().join("id.json"), 2, &identity_frame_rows(2));
    let signal = json!({"schema_version": "1", "values": [[0.0, 0.0], [0.0, 0.0]]});
    std::fs::write(
        dir.path().join("zero.json"),
        serde_json::to_string(&signal).unwrap(),
    )
    .unwrap();
    let out = framecast(
        dir.path(),
        &[
            "reconstruct",
            "--frame",
            "id.json",
            "--signal",
            "zero.json",
            "--out",
            "z.csv",
        ],
    );
    assert_exit(&out, 0);
    let text = std::fs::read_to_string(dir.path().join("z.csv")).unwrap();
    assert!(text.lines().last().unwrap().ends_with(",0.0"));
}

#[test]
fn reconstruct_rejects_dimension_mismatch() {
    let dir = TempDir::new().unwrap();
    write_frame_json(&dir.path().join("id.json"), 2, &identity_frame_rows(2));
    let signal = json!({"schema_version": "1", "values": [[1.0, 0.0]]});
    std::fs::write(
        dir.path().join("bad.json"),
        serde_json::to_string(&signal).unwrap(),
    )
    .unwrap();
    let out = framecast(
        dir.path(),
        &[
            "reconstruct",
            "--frame",
            "id.json",
            "--signal",
            "bad.json",
            "--out",
            "z.csv",
        ],
    );
    assert_exit(&out, 3);
}

#[test]
fn reconstruct_stride_thins_rows_but_keeps_summary() {
    let dir = TempDir::new().unwrap();
    let out = framecast(
        dir.path(),
        &[
            "reconstruct",
            "--signal",
            "fig1",
            "--n-grid",
            "10",
            "--out",
            "s.csv",
            "--stride",
            "7",
        ],
    );
    assert_exit(&out, 0);
    let text = std::fs::read_to_string(dir.path().join("s.csv")).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    // header + ceil(100 / 7) rows + summary
    assert_eq!(lines.len(), 1 + 15 + 1);
    assert!(lines.last().unwrap().starts_with("summary"));
}

#[test]
fn degenerate_grid_parameters_exit_with_bad_input() {
    let dir = TempDir::new().unwrap();
    let out = framecast(
        dir.path(),
        &[
            "reconstruct",
            "--signal",
            "fig1",
            "--n-grid",
            "0",
            "--out",
            "x.csv",
        ],
    );
    assert_exit(&out, 2);
    let out = framecast(
        dir.path(),
        &[
            "spiral-points",
            "--c",
            "1",
            "--R",
            "0.25",
            "--delta",
            "0.25",
            "--grid-density",
            "5",
            "--out",
            "x.json",
        ],
    );
    assert_exit(&out, 2);
}

#[test]
fn error_bound_evaluates_closed_form() {
    let dir = TempDir::new().unwrap();
    let out = framecast(
        dir.path(),
        &[
            "error-bound",
            "--k",
            "2",
            "--deriv-l1",
            "1",
            "--A",
            "1",
            "--R",
            "0.5",
            "--N-tilde",
            "99",
        ],
    );
    assert_exit(&out, 0);
    let report = stdout_json(&out);
    let bound = report["outputs"]["bound"].as_f64().unwrap();
    let expected = 1.0 / (4.0 * std::f64::consts::PI.powi(2)) * 0.02;
    assert!((bound - expected).abs() < 1e-18);
}

#[test]
fn error_bound_rejects_first_order() {
    let dir = TempDir::new().unwrap();
    let out = framecast(
        dir.path(),
        &[
            "error-bound",
            "--k",
            "1",
            "--deriv-l1",
            "1",
            "--N-tilde",
            "9",
        ],
    );
    assert_exit(&out, 2);
}

#[test]
fn error_bound_harmonic_formula_matches_general_form() {
    let dir = TempDir::new().unwrap();
    let run = |formula: &str| -> f64 {
        let out = framecast(
            dir.path(),
            &[
                "error-bound",
                "--k",
                "2",
                "--deriv-l1",
                "3.5",
                "--A",
                "1",
                "--R",
                "0.5",
                "--N-tilde",
                "31",
                "--formula",
                formula,
            ],
        );
        assert_exit(&out, 0);
        stdout_json(&out)["outputs"]["bound"].as_f64().unwrap()
    };
    let general = run("thm32");
    let harmonic = run("eq35");
    assert!((general - harmonic).abs() <= 1e-14 * general);
}

#[test]
fn compare_partition_dichotomy() {
    let dir = TempDir::new().unwrap();
    // Non-orthogonal four-frequency configuration.
    write_frame_json(&dir.path().join("four.json"), 4, &exponential_rows(4));
    let out = framecast(
        dir.path(),
        &["compare", "--in", "four.json", "--partition", "0,1;2,3"],
    );
    assert_exit(&out, 0);
    let report = stdout_json(&out);
    assert_eq!(report["outputs"]["coincides_with_full"], json!(false));
    assert!(report["outputs"]["deviation_from_full"].as_f64().unwrap() > 1e-3);

    // Orthogonal pair of lines: singleton partition of an orthogonal basis.
    let rows = vec![
        vec![Complex64::new(2.0, 0.0), Complex64::ZERO],
        vec![Complex64::ZERO, Complex64::new(0.5, 0.0)],
    ];
    write_frame_json(&dir.path().join("ortho.json"), 2, &rows);
    let out = framecast(
        dir.path(),
        &["compare", "--in", "ortho.json", "--partition", "0;1"],
    );
    assert_exit(&out, 0);
    let report = stdout_json(&out);
    assert_eq!(report["outputs"]["coincides_with_full"], json!(true));
    assert!(report["outputs"]["deviation_from_full"].as_f64().unwrap() <= 1e-8);
}

#[test]
fn compare_rejects_invalid_partition() {
    let dir = TempDir::new().unwrap();
    write_frame_json(&dir.path().join("id.json"), 2, &identity_frame_rows(2));
    let out = framecast(
        dir.path(),
        &["compare", "--in", "id.json", "--partition", "0;0,1"],
    );
    assert_exit(&out, 2);
}

#[test]
fn frame_bounds_of_repeated_basis() {
    let dir = TempDir::new().unwrap();
    let rows = vec![
        vec![Complex64::ONE, Complex64::ZERO],
        vec![Complex64::ONE, Complex64::ZERO],
        vec![Complex64::ZERO, Complex64::ONE],
    ];
    write_frame_json(&dir.path().join("f.json"), 2, &rows);
    let out = framecast(dir.path(), &["frame-bounds", "--in", "f.json"]);
    assert_exit(&out, 0);
    let report = stdout_json(&out);
    assert!((report["outputs"]["lower_bound"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!((report["outputs"]["upper_bound"].as_f64().unwrap() - 2.0).abs() < 1e-12);
}

#[test]
fn missing_input_file_is_an_io_error() {
    let dir = TempDir::new().unwrap();
    let out = framecast(
        dir.path(),
        &["frame-bounds", "--in", "does-not-exist.json"],
    );
    assert_exit(&out, 4);
}

#[test]
fn malformed_json_is_an_io_error() {
    let dir = TempDir::new().unwrap();
    std::fs::write(dir.path().join("broken.json"), "{ not json").unwrap();
    let out = framecast(dir.path(), &["frame-bounds", "--in", "broken.json"]);
    assert_exit(&out, 4);
}

#[test]
fn tol_env_var_overrides_default() {
    let dir = TempDir::new().unwrap();
    write_frame_json(&dir.path().join("id.json"), 2, &identity_frame_rows(2));
    let out = Command::new(env!("CARGO_BIN_EXE_framecast"))
        .args(["parseval", "--in", "id.json", "--out", "p.json"])
        .current_dir(dir.path())
        .env("FRAMECAST_TOL", "1e-6")
        .output()
        .unwrap();
    assert_exit(&out, 0);
    let report = stdout_json(&out);
    assert_eq!(
        report["outputs"]["partial_isometry_defect"]["tolerance"],
        json!(1e-6)
    );
}

#[test]
fn tol_flag_beats_env_and_config() {
    let dir = TempDir::new().unwrap();
    write_frame_json(&dir.path().join("id.json"), 2, &identity_frame_rows(2));
    std::fs::write(dir.path().join("cfg.json"), r#"{"tol": 1e-4}"#).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_framecast"))
        .args([
            "parseval",
            "--in",
            "id.json",
            "--out",
            "p.json",
            "--config",
            "cfg.json",
            "--tol",
            "1e-7",
        ])
        .current_dir(dir.path())
        .env("FRAMECAST_TOL", "1e-5")
        .output()
        .unwrap();
    assert_exit(&out, 0);
    let report = stdout_json(&out);
    assert_eq!(
        report["outputs"]["partial_isometry_defect"]["tolerance"],
        json!(1e-7)
    );
}

#[test]
fn labels_survive_the_parseval_conversion() {
    let dir = TempDir::new().unwrap();
    let rows = exponential_rows(3);
    let vectors: Vec<Vec<[f64; 2]>> = rows
        .iter()
        .map(|r| r.iter().map(|z| [z.re, z.im]).collect())
        .collect();
    let file = json!({
        "schema_version": "1",
        "dim": 3,
        "vectors": vectors,
        "labels": [LAMBDAS[0], LAMBDAS[1], LAMBDAS[2]],
    });
    let path = dir.path().join("labeled.json");
    std::fs::write(&path, serde_json::to_string_pretty(&file).unwrap()).unwrap();
    let out = framecast(
        dir.path(),
        &["parseval", "--in", "labeled.json", "--out", "p.json"],
    );
    assert_exit(&out, 0);
    let p: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("p.json")).unwrap())
            .unwrap();
    assert_eq!(p["labels"][1].as_f64().unwrap(), LAMBDAS[1]);
}

#[test]
fn sinc_sanity_anchor() {
    // Anchor the frequency constants this file is built around.
    assert!((sinc(LAMBDAS[1] - LAMBDAS[0]) - 0.08987417540594275).abs() < 1e-15);
}
