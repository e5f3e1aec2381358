//! `framecast` command line: Parseval frame conversion, spiral sample
//! selection, disk-grid reconstruction, and truncation error bounds.
//!
//! Exit codes: 0 success, 2 bad input or spec, 3 mathematical failure, 4
//! I/O or parse failure.

mod commands;
mod files;

use clap::{Parser, Subcommand};
use framecast_core::Error;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug)]
pub enum CliError {
    /// Invalid flags, specs, or file contents (exit 2).
    BadInput(String),
    /// A numerical operation failed (exit 3).
    Math(String),
    /// File system or parse trouble (exit 4).
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::BadInput(_) => 2,
            CliError::Math(_) => 3,
            CliError::Io(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::BadInput(m) | CliError::Math(m) | CliError::Io(m) => m,
        }
    }

    /// Classifies a core error as a math failure (exit 3).
    pub fn math(e: Error) -> Self {
        CliError::Math(e.to_string())
    }

    /// Classifies a core error as caller-supplied bad input (exit 2).
    pub fn bad_input(e: Error) -> Self {
        CliError::BadInput(e.to_string())
    }
}

/// Tolerances used for report pass/fail annotations.
#[derive(Debug, Clone, Copy)]
pub struct Tolerance {
    /// Main relative tolerance (defect checks).
    pub main: f64,
    /// Frame-bound deviation tolerance.
    pub frame: f64,
    /// Coincidence threshold for partition comparisons.
    pub coincidence: f64,
}

impl Tolerance {
    fn resolve(flag: Option<f64>, config: Option<&PathBuf>) -> Result<Self, CliError> {
        let mut main = 1e-10;
        if let Some(path) = config {
            let value: serde_json::Value = files::read_json(path)?;
            if let Some(t) = value.get("tol").and_then(serde_json::Value::as_f64) {
                main = t;
            }
        }
        if let Ok(env_tol) = std::env::var("FRAMECAST_TOL") {
            main = env_tol.parse().map_err(|e| {
                CliError::BadInput(format!("cannot parse FRAMECAST_TOL {env_tol:?}: {e}"))
            })?;
        }
        if let Some(t) = flag {
            main = t;
        }
        #[allow(clippy::neg_cmp_op_on_partial_ord)] // NaN must fail too
        if !(main > 0.0) {
            return Err(CliError::BadInput(format!(
                "tolerance must be positive, got {main}"
            )));
        }
        Ok(Tolerance {
            main,
            frame: main.max(1e-9),
            coincidence: 1e-8_f64.max(main),
        })
    }
}

#[derive(Parser)]
#[command(
    name = "framecast",
    version,
    about = "Parseval frames from arbitrary frames, spiral Fourier sampling, and truncation error bounds"
)]
struct Cli {
    /// Override the default check tolerance (also: FRAMECAST_TOL).
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// JSON config file; currently `{"tol": <value>}`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Select sample points along an admissible spiral.
    SpiralPoints {
        /// Spiral pitch (frequency-plane units per turn).
        #[arg(long)]
        c: f64,
        /// Signal-domain ball radius.
        #[arg(long = "R")]
        ball_radius: f64,
        /// Arc-length half-gap between consecutive points.
        #[arg(long)]
        delta: f64,
        /// Number of points to select.
        #[arg(long, default_value_t = 3)]
        count: usize,
        /// Arc-length mode: "paper" (quadratic closed form) or "exact".
        #[arg(long, default_value = "paper")]
        mode: String,
        /// Grid density for the covering-radius estimate.
        #[arg(long, default_value_t = 200)]
        grid_density: usize,
        /// Output JSON path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Convert a frame file into its closest Parseval frame.
    Parseval {
        /// Input frame JSON.
        #[arg(long = "in")]
        input: PathBuf,
        /// Output frame JSON.
        #[arg(long)]
        out: PathBuf,
        /// Also write the transfer matrix (rows express outputs through
        /// inputs) as CSV.
        #[arg(long)]
        emit_transfer: Option<PathBuf>,
        /// Also write the report JSON here (it always prints to stdout).
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Reconstruct a signal from frame measurements and emit plot data.
    Reconstruct {
        /// Input frame JSON (optional for builtin signals).
        #[arg(long)]
        frame: Option<PathBuf>,
        /// Signal JSON path, or a builtin name: "fig1" (first disk
        /// exponential) or "fig2" (combination 1, -2, 1).
        #[arg(long)]
        signal: String,
        /// Polar grid subdivisions for builtin signals.
        #[arg(long, default_value_t = 50)]
        n_grid: usize,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
        /// Keep every k-th sample row in the CSV (the summary row always
        /// stays).
        #[arg(long, default_value_t = 1)]
        stride: usize,
    },
    /// Evaluate the closed-form truncation error bound.
    ErrorBound {
        /// Smoothness order (at least 2).
        #[arg(long)]
        k: u32,
        /// L1 norm of the k-th derivative.
        #[arg(long)]
        deriv_l1: f64,
        /// Lower frame bound.
        #[arg(long = "A", default_value_t = 1.0)]
        lower_frame_bound: f64,
        /// Interval half-width.
        #[arg(long = "R", default_value_t = 0.5)]
        halfwidth: f64,
        /// Retained term count.
        #[arg(long = "N-tilde")]
        n_tilde: usize,
        /// Bound form: "thm32" (general) or "eq35" (harmonic special case).
        #[arg(long, default_value = "thm32")]
        formula: String,
        /// Tail index growth constant (|lambda_n| >= scale * n).
        #[arg(long, default_value_t = 1.0)]
        index_scale: f64,
        /// Also write the report JSON here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Compare per-partition Parseval conversion against the whole-frame one.
    Compare {
        /// Input frame JSON.
        #[arg(long = "in")]
        input: PathBuf,
        /// Partition of 0-based indices, e.g. "0,1;2,3".
        #[arg(long)]
        partition: String,
        /// Also write the report JSON here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Report optimal frame bounds of a frame file.
    FrameBounds {
        /// Input frame JSON.
        #[arg(long = "in")]
        input: PathBuf,
        /// Also write the report JSON here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let tol = Tolerance::resolve(cli.tol, cli.config.as_ref())?;
    match cli.command {
        Command::SpiralPoints {
            c,
            ball_radius,
            delta,
            count,
            mode,
            grid_density,
            out,
        } => commands::cmd_spiral_points(c, ball_radius, delta, count, &mode, grid_density, &out),
        Command::Parseval {
            input,
            out,
            emit_transfer,
            report,
        } => commands::cmd_parseval(
            &input,
            &out,
            emit_transfer.as_deref(),
            report.as_deref(),
            tol,
        ),
        Command::Reconstruct {
            frame,
            signal,
            n_grid,
            out,
            stride,
        } => commands::cmd_reconstruct(frame.as_deref(), &signal, n_grid, &out, stride, tol),
        Command::ErrorBound {
            k,
            deriv_l1,
            lower_frame_bound,
            halfwidth,
            n_tilde,
            formula,
            index_scale,
            report,
        } => commands::cmd_error_bound(
            k,
            deriv_l1,
            lower_frame_bound,
            halfwidth,
            n_tilde,
            &formula,
            index_scale,
            report.as_deref(),
        ),
        Command::Compare {
            input,
            partition,
            report,
        } => commands::cmd_compare(&input, &partition, report.as_deref(), tol),
        Command::FrameBounds { input, report } => {
            commands::cmd_frame_bounds(&input, report.as_deref(), tol)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
