//! Implementations of the subcommands.

use crate::files::{
    format_float, read_json, write_json, write_matrix_csv, CheckedValue, FrameFile, ReportFile,
    SignalFile, SCHEMA_VERSION,
};
use crate::{CliError, Tolerance};
use framecast_core::frame::{
    frame_bounds, frame_bounds_in_span, subframe_parseval_union, symmetric_distance,
    to_parseval_in_span, Frame, ParsevalResult,
};
use framecast_core::linalg::is_partial_isometry;
use framecast_core::matrix::inner;
use framecast_core::recon::{
    reconstruct, truncation_bound, truncation_bound_harmonic, BoundFormula, TruncationBoundInput,
};
use framecast_core::spiral::{
    arc_length, covering_radius, disk_grid_frame, select_spiral_points, spiral_point,
    ArcLengthMode, DiskGrid, SamplePointSet, SpiralSpec, SpiralStop,
};
use framecast_core::Complex64;
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::path::Path;

pub fn parse_mode(mode: &str) -> Result<ArcLengthMode, CliError> {
    match mode {
        "paper" => Ok(ArcLengthMode::Quadratic),
        "exact" => Ok(ArcLengthMode::Exact),
        other => Err(CliError::BadInput(format!(
            "unknown arc-length mode {other:?} (expected paper or exact)"
        ))),
    }
}

/// Output of `spiral-points`: the chosen set plus its self-validation data.
#[derive(Debug, Serialize)]
struct SpiralPointsFile {
    schema_version: String,
    c: f64,
    ball_radius: f64,
    delta: f64,
    mode: String,
    points: Vec<[f64; 2]>,
    thetas: Vec<f64>,
    gaps: Vec<f64>,
    min_separation: f64,
    covering: CoveringSection,
}

#[derive(Debug, Serialize)]
struct CoveringSection {
    rho_hat: f64,
    region_radius: f64,
    product: f64,
    satisfies_covering: bool,
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_spiral_points(
    c: f64,
    ball_radius: f64,
    delta: f64,
    count: usize,
    mode: &str,
    grid_density: usize,
    out: &Path,
) -> Result<(), CliError> {
    if grid_density < 10 {
        return Err(CliError::BadInput(format!(
            "grid density {grid_density} is below the minimum of 10"
        )));
    }
    let arc_mode = parse_mode(mode)?;
    let spec = SpiralSpec::new(c, ball_radius, delta).map_err(CliError::bad_input)?;
    let set = select_spiral_points(&spec, SpiralStop::Count(count), arc_mode)
        .map_err(CliError::math)?;
    let thetas = set.thetas.clone().unwrap_or_default();
    let mut gaps = Vec::with_capacity(thetas.len());
    let mut prev = 0.0;
    for &t in &thetas {
        gaps.push(arc_length(c, prev, t, arc_mode).map_err(CliError::math)?);
        prev = t;
    }
    let covering = covering_radius(&set, ball_radius, grid_density);
    let file = SpiralPointsFile {
        schema_version: SCHEMA_VERSION.into(),
        c,
        ball_radius,
        delta,
        mode: mode.to_string(),
        points: set.points.iter().map(|p| [p[0], p[1]]).collect(),
        thetas,
        gaps,
        min_separation: set.min_separation,
        covering: CoveringSection {
            rho_hat: covering.rho_hat,
            region_radius: covering.region_radius,
            product: covering.product,
            satisfies_covering: covering.satisfies_covering,
        },
    };
    write_json(out, &file)?;
    println!(
        "wrote {} points to {} (all gaps < {})",
        file.points.len(),
        out.display(),
        2.0 * delta
    );
    Ok(())
}

fn load_frame(path: &Path) -> Result<Frame, CliError> {
    read_json::<FrameFile>(path)?.into_frame()
}

/// Parseval diagnostics shared by `parseval` and `compare`.
fn parseval_report(report: &mut ReportFile, res: &ParsevalResult, input: &Frame, tol: Tolerance) {
    let bounds = frame_bounds_in_span(&res.parseval)
        .expect("conversion output always has positive bounds");
    report.checked("lower_frame_bound", CheckedValue::near(bounds.lower, 1.0, tol.frame));
    report.checked("upper_frame_bound", CheckedValue::near(bounds.upper, 1.0, tol.frame));
    let iso = is_partial_isometry(&res.w, tol.main);
    report.checked(
        "partial_isometry_defect",
        CheckedValue::below(iso.defect, tol.main),
    );
    report.checked(
        "coisometry_defect",
        CheckedValue::below(iso.coisometry_defect, tol.main),
    );
    let dist = symmetric_distance(&res.parseval, input).expect("same shape by construction");
    report.output("symmetric_distance_to_input", dist);
    report.output("span_dim", res.span_dim as u64);
}

pub fn cmd_parseval(
    input: &Path,
    out: &Path,
    emit_transfer: Option<&Path>,
    report_path: Option<&Path>,
    tol: Tolerance,
) -> Result<(), CliError> {
    let frame = load_frame(input)?;
    let res = to_parseval_in_span(&frame).map_err(CliError::math)?;
    if res.span_dim < frame.dim() {
        eprintln!(
            "note: frame spans a {}-dimensional subspace of dimension-{} space; \
             the output is a Parseval frame for that span",
            res.span_dim,
            frame.dim()
        );
    }

    let mut metadata = BTreeMap::new();
    metadata.insert("source".into(), Value::String(input.display().to_string()));
    write_json(out, &FrameFile::from_frame(&res.parseval, Some(metadata)))?;

    if let Some(path) = emit_transfer {
        write_matrix_csv(path, &res.transfer)?;
    }

    let mut report = ReportFile::new("parseval");
    report.echo("in", input.display().to_string());
    report.echo("out", out.display().to_string());
    report.echo("vectors", frame.len() as u64);
    report.echo("dim", frame.dim() as u64);
    parseval_report(&mut report, &res, &frame, tol);
    emit_report(&report, report_path)
}

fn emit_report(report: &ReportFile, path: Option<&Path>) -> Result<(), CliError> {
    let text =
        serde_json::to_string_pretty(report).map_err(|e| CliError::Io(format!("{e}")))?;
    println!("{text}");
    if let Some(path) = path {
        write_json(path, report)?;
    }
    Ok(())
}

/// The worked disk-grid pipeline behind the `fig1`/`fig2` builtins.
struct BuiltinPipeline {
    frame: Frame,
    grid: DiskGrid,
}

fn builtin_pipeline(n_grid: usize) -> Result<BuiltinPipeline, CliError> {
    if n_grid == 0 {
        return Err(CliError::BadInput(
            "the polar grid needs at least one subdivision".into(),
        ));
    }
    let thetas = [1.0 / 16.0, 1.0 / 8.0, 1.0 / 4.0];
    let points: Vec<Vec<f64>> = thetas
        .iter()
        .map(|&t| spiral_point(1.0, t).to_vec())
        .collect();
    let mut set = SamplePointSet::from_points(points).map_err(CliError::math)?;
    set.delta = Some(0.25);
    set.thetas = Some(thetas.to_vec());
    let grid = DiskGrid::polar_midpoints(0.25, n_grid);
    let frame = disk_grid_frame(&set, &grid).map_err(CliError::math)?;
    Ok(BuiltinPipeline { frame, grid })
}

fn builtin_signal(pipeline: &BuiltinPipeline, which: &str) -> Option<Vec<Complex64>> {
    let weights: &[f64] = match which {
        "fig1" => &[1.0, 0.0, 0.0],
        "fig2" => &[1.0, -2.0, 1.0],
        _ => return None,
    };
    let mut out = vec![Complex64::ZERO; pipeline.frame.dim()];
    for (i, &w) in weights.iter().enumerate() {
        for (o, v) in out.iter_mut().zip(pipeline.frame.vector(i)) {
            *o += Complex64::new(w, 0.0) * v;
        }
    }
    Some(out)
}

pub fn cmd_reconstruct(
    frame_path: Option<&Path>,
    signal: &str,
    n_grid: usize,
    out: &Path,
    stride: usize,
    tol: Tolerance,
) -> Result<(), CliError> {
    let builtin = matches!(signal, "fig1" | "fig2");
    let (frame, nodes, signal_values): (Frame, Option<Vec<[f64; 2]>>, Vec<Complex64>) = if builtin
    {
        let pipeline = builtin_pipeline(n_grid)?;
        let values = builtin_signal(&pipeline, signal).expect("matched above");
        let nodes = pipeline.grid.nodes.clone();
        (pipeline.frame, Some(nodes), values)
    } else {
        let path = frame_path.ok_or_else(|| {
            CliError::BadInput("--frame is required unless the signal is a builtin".into())
        })?;
        let frame = load_frame(path)?;
        let values = read_json::<SignalFile>(Path::new(signal))?.into_values();
        let nodes = grid_nodes_from_metadata(path)?;
        (frame, nodes, values)
    };

    if signal_values.len() != frame.dim() {
        return Err(CliError::math(framecast_core::Error::ShapeMismatch {
            context: format!(
                "signal has {} samples, frame dimension is {}",
                signal_values.len(),
                frame.dim()
            ),
        }));
    }

    let res = to_parseval_in_span(&frame).map_err(CliError::math)?;
    let coeffs: Vec<Complex64> = (0..res.parseval.len())
        .map(|i| inner(&signal_values, res.parseval.vector(i)))
        .collect();
    let recon = reconstruct(&res.parseval, &coeffs).map_err(CliError::math)?;

    let norm = |v: &[Complex64]| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let err: Vec<f64> = signal_values
        .iter()
        .zip(&recon)
        .map(|(a, b)| (a - b).norm())
        .collect();
    let signal_norm = norm(&signal_values);
    let rel_l2 = if signal_norm == 0.0 {
        0.0
    } else {
        err.iter().map(|e| e * e).sum::<f64>().sqrt() / signal_norm
    };
    if rel_l2 > 1e-6 {
        eprintln!(
            "warning: signal lies measurably outside the frame span \
             (relative reconstruction error {rel_l2:.3e})"
        );
    }

    let mut csv = String::from("node_index,x,y,re_original,re_reconstructed,abs_error\n");
    for i in (0..signal_values.len()).step_by(stride.max(1)) {
        let (x, y) = nodes
            .as_ref()
            .map(|n| (format_float(n[i][0]), format_float(n[i][1])))
            .unwrap_or_default();
        csv.push_str(&format!(
            "{i},{x},{y},{},{},{}\n",
            format_float(signal_values[i].re),
            format_float(recon[i].re),
            format_float(err[i]),
        ));
    }
    csv.push_str(&format!("summary,,,,,{}\n", format_float(rel_l2)));
    std::fs::write(out, csv)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", out.display())))?;
    println!(
        "reconstructed {} samples, relative L2 error {rel_l2:.3e} (tolerance {:.1e})",
        signal_values.len(),
        tol.frame
    );
    Ok(())
}

/// Rebuilds polar-grid node coordinates when the frame file's metadata
/// carries the grid parameters.
fn grid_nodes_from_metadata(path: &Path) -> Result<Option<Vec<[f64; 2]>>, CliError> {
    let file: FrameFile = read_json(path)?;
    let meta = match &file.metadata {
        Some(m) => m,
        None => return Ok(None),
    };
    let (r, n) = match (
        meta.get("grid_radius").and_then(Value::as_f64),
        meta.get("grid_subdivisions").and_then(Value::as_u64),
    ) {
        (Some(r), Some(n)) => (r, n as usize),
        _ => return Ok(None),
    };
    if file.dim != n * n {
        return Ok(None);
    }
    Ok(Some(DiskGrid::polar_midpoints(r, n).nodes))
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_error_bound(
    k: u32,
    deriv_l1: f64,
    lower_frame_bound: f64,
    halfwidth: f64,
    n_tilde: usize,
    formula: &str,
    index_scale: f64,
    report_path: Option<&Path>,
) -> Result<(), CliError> {
    let formula = BoundFormula::from_id(formula).ok_or_else(|| {
        CliError::BadInput(format!(
            "unknown formula {formula:?} (expected thm32 or eq35)"
        ))
    })?;
    let report_value = match formula {
        BoundFormula::General => {
            let input = TruncationBoundInput::with_index_scale(
                k,
                deriv_l1,
                lower_frame_bound,
                halfwidth,
                n_tilde,
                index_scale,
            )
            .map_err(CliError::bad_input)?;
            truncation_bound(&input)
        }
        BoundFormula::Harmonic => {
            if k != 2 || lower_frame_bound != 1.0 || halfwidth != 0.5 {
                return Err(CliError::BadInput(
                    "formula eq35 requires --k 2 --A 1 --R 0.5".into(),
                ));
            }
            truncation_bound_harmonic(deriv_l1, n_tilde).map_err(CliError::bad_input)?
        }
        BoundFormula::HighDim => {
            return Err(CliError::BadInput(
                "the highdim formula needs the library interface (ball radius and tail sum)"
                    .into(),
            ));
        }
    };

    let mut report = ReportFile::new("error-bound");
    report.echo("k", k);
    report.echo("deriv_l1", deriv_l1);
    report.echo("A", lower_frame_bound);
    report.echo("R", halfwidth);
    report.echo("N_tilde", n_tilde as u64);
    report.echo("formula", report_value.formula.id());
    report.echo("index_scale", index_scale);
    report.output("bound", report_value.bound);
    emit_report(&report, report_path)
}

pub fn parse_partition(spec: &str) -> Result<Vec<Vec<usize>>, CliError> {
    let mut parts = Vec::new();
    for group in spec.split(';') {
        let indices: Result<Vec<usize>, _> = group
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect();
        parts.push(indices.map_err(|e| {
            CliError::BadInput(format!("cannot parse partition group {group:?}: {e}"))
        })?);
    }
    Ok(parts)
}

pub fn cmd_compare(
    input: &Path,
    partition: &str,
    report_path: Option<&Path>,
    tol: Tolerance,
) -> Result<(), CliError> {
    let frame = load_frame(input)?;
    let parts = parse_partition(partition)?;
    let union = subframe_parseval_union(&frame, &parts).map_err(|e| match e {
        framecast_core::Error::PartitionInvalid { .. }
        | framecast_core::Error::DirectSumViolated { .. } => CliError::bad_input(e),
        other => CliError::math(other),
    })?;
    let full = to_parseval_in_span(&frame).map_err(CliError::math)?;

    let mut report = ReportFile::new("compare");
    report.echo("in", input.display().to_string());
    report.echo(
        "partition",
        Value::Array(
            parts
                .iter()
                .map(|p| Value::Array(p.iter().map(|&i| json!(i)).collect()))
                .collect(),
        ),
    );
    report.output("coincides_with_full", union.coincides_with_full);
    report.output("deviation_from_full", union.deviation_from_full);
    report.output(
        "part_dims",
        Value::Array(union.part_dims.iter().map(|&d| json!(d)).collect()),
    );
    report.checked(
        "union_frame_operator_deviation",
        CheckedValue::below(union.frame_operator_deviation, tol.coincidence),
    );
    if let Ok(b) = frame_bounds(&union.frame) {
        report.checked("union_lower_bound", CheckedValue::near(b.lower, 1.0, tol.frame));
        report.checked("union_upper_bound", CheckedValue::near(b.upper, 1.0, tol.frame));
    }
    parseval_report(&mut report, &full, &frame, tol);
    emit_report(&report, report_path)
}

pub fn cmd_frame_bounds(
    input: &Path,
    report_path: Option<&Path>,
    tol: Tolerance,
) -> Result<(), CliError> {
    let frame = load_frame(input)?;
    let mut report = ReportFile::new("frame-bounds");
    report.echo("in", input.display().to_string());
    report.echo("vectors", frame.len() as u64);
    report.echo("dim", frame.dim() as u64);
    let span = frame_bounds_in_span(&frame).map_err(CliError::math)?;
    report.output("lower_bound_in_span", span.lower);
    report.output("upper_bound_in_span", span.upper);
    report.output("condition_in_span", span.upper / span.lower);
    match frame_bounds(&frame) {
        Ok(b) => {
            report.output("lower_bound", b.lower);
            report.output("upper_bound", b.upper);
            report.checked(
                "tightness",
                CheckedValue::near(b.upper / b.lower, 1.0, tol.frame),
            );
        }
        Err(e) => {
            report.output("ambient", format!("not a frame for the ambient space: {e}"));
        }
    }
    emit_report(&report, report_path)
}

