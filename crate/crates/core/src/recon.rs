//! Signal reconstruction from frame coefficients and truncation error
//! bounds.
//!
//! For a Parseval frame the reconstruction is the plain synthesis
//! `sum_i c_i g_i` with `c_i = <f, g_i>`; no operator inversion is involved.
//! The dual path `sum_n c_n S^{-1} f_n` is kept as a comparison baseline for
//! general frames — it needs the frame-operator inverse, which is exactly
//! what the Parseval conversion avoids, and is refused above a condition
//! limit.
//!
//! The bound calculators turn smoothness of the signal into worst-case
//! truncation errors: a function with `k` integrable derivatives vanishing
//! at the interval ends has `|fhat(lambda)| <= ||f^(k)||_L1 / (2 pi
//! |lambda|)^k`, and summing that decay over the discarded tail gives the
//! closed-form bounds below.

use crate::error::{Error, Result};
use crate::frame::{frame_operator, Frame};
use crate::linalg::herm_eig;
use crate::matrix::vec_norm;
use crate::{tol, Complex64, ComplexMatrix};
use std::f64::consts::PI;

/// Synthesis reconstruction `sum_i coefficients[i] * frame_vector_i`.
///
/// With a Parseval frame and `coefficients[i] = <f, g_i>` this returns `f`
/// exactly (within roundoff) for any `f` in the span.
pub fn reconstruct(frame: &Frame, coefficients: &[Complex64]) -> Result<Vec<Complex64>> {
    if coefficients.len() != frame.len() {
        return Err(Error::ShapeMismatch {
            context: format!(
                "{} coefficients for {} frame vectors",
                coefficients.len(),
                frame.len()
            ),
        });
    }
    let mut out = vec![Complex64::ZERO; frame.dim()];
    for (i, c) in coefficients.iter().enumerate() {
        for (o, v) in out.iter_mut().zip(frame.vector(i)) {
            *o += c * v;
        }
    }
    Ok(out)
}

/// Dual-frame reconstruction `sum_n coefficients[n] * S^{-1} f_n` with
/// `coefficients[n] = <f, f_n>`.
///
/// Requires the frame to span the ambient space and the frame operator to
/// have condition number at most [`tol::MAX_DUAL_CONDITION`]. Cost grows as
/// the cube of the ambient dimension.
pub fn reconstruct_dual(frame: &Frame, coefficients: &[Complex64]) -> Result<Vec<Complex64>> {
    let inv = frame_operator_inverse(frame)?;
    let synth = reconstruct(frame, coefficients)?;
    Ok(inv.mul_vec(&synth))
}

fn frame_operator_inverse(frame: &Frame) -> Result<ComplexMatrix> {
    if frame.len() < frame.dim() {
        return Err(Error::NotAFrame);
    }
    let s = frame_operator(frame);
    let eig = herm_eig(&s)?;
    let min = eig.values[0];
    let max = eig.values[eig.values.len() - 1];
    if min <= tol::RANK * max {
        return Err(Error::NotAFrame);
    }
    let cond = max / min;
    if cond > tol::MAX_DUAL_CONDITION {
        return Err(Error::IllConditioned {
            cond,
            limit: tol::MAX_DUAL_CONDITION,
        });
    }
    let inv_diag: Vec<f64> = eig.values.iter().map(|v| 1.0 / v).collect();
    Ok(eig
        .vectors
        .mul(&ComplexMatrix::from_real_diag(&inv_diag))
        .mul(&eig.vectors.adjoint()))
}

/// Truncated dual reconstruction: keeps only the first `n_tilde` terms (in
/// input label order) and reports the discarded tail's coordinate norm.
///
/// Returns `(f_tilde, ||f - f_tilde||)`, where `f` is the full dual
/// reconstruction from all coefficients.
pub fn truncate_split(
    frame: &Frame,
    coefficients: &[Complex64],
    n_tilde: usize,
) -> Result<(Vec<Complex64>, f64)> {
    if coefficients.len() != frame.len() {
        return Err(Error::ShapeMismatch {
            context: format!(
                "{} coefficients for {} frame vectors",
                coefficients.len(),
                frame.len()
            ),
        });
    }
    if n_tilde == 0 || n_tilde > frame.len() {
        return Err(Error::BadTruncation {
            got: n_tilde,
            max: frame.len(),
        });
    }
    let inv = frame_operator_inverse(frame)?;
    let full = inv.mul_vec(&reconstruct(frame, coefficients)?);

    let mut head = coefficients.to_vec();
    for c in head.iter_mut().skip(n_tilde) {
        *c = Complex64::ZERO;
    }
    let f_tilde = inv.mul_vec(&reconstruct(frame, &head)?);

    let eps: Vec<Complex64> = full
        .iter()
        .zip(&f_tilde)
        .map(|(a, b)| a - b)
        .collect();
    Ok((f_tilde, vec_norm(&eps)))
}

/// Pointwise Fourier decay bound `deriv_l1 / (2 pi lambda_abs)^k` for a
/// signal whose derivatives through order `k - 1` vanish at the interval
/// ends and whose `k`-th derivative has the given `L1` norm.
pub fn fourier_decay_bound(k: u32, deriv_l1: f64, lambda_abs: f64) -> f64 {
    assert!(k >= 1 && lambda_abs > 0.0);
    deriv_l1 / (2.0 * PI * lambda_abs).powi(k as i32)
}

/// Higher-dimensional pointwise decay bound
/// `(sqrt(n)/(2 pi))^k * partial_l1 / |lambda|^k`, where `partial_l1` is the
/// `L1` norm over the ball of the `k`-th partial derivative in the
/// coordinate of largest frequency magnitude.
pub fn highdim_decay_bound(n_dim: u32, k: u32, partial_l1: f64, lambda_norm: f64) -> f64 {
    assert!(n_dim >= 1 && k >= 1 && lambda_norm > 0.0);
    ((n_dim as f64).sqrt() / (2.0 * PI)).powi(k as i32) * partial_l1 / lambda_norm.powi(k as i32)
}

/// Inputs to the interval truncation bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationBoundInput {
    /// Smoothness order; at least 2 so the tail integral converges.
    pub k: u32,
    /// `L1` norm of the k-th derivative over the interval.
    pub deriv_l1: f64,
    /// Lower frame bound `A`.
    pub lower_frame_bound: f64,
    /// Interval half-width `R`.
    pub halfwidth: f64,
    /// Number of retained terms.
    pub n_tilde: usize,
    /// Index growth constant: the tail frequencies are assumed to satisfy
    /// `|lambda_n| >= index_scale * n`. Defaults to 1.
    pub index_scale: f64,
}

impl TruncationBoundInput {
    pub fn new(
        k: u32,
        deriv_l1: f64,
        lower_frame_bound: f64,
        halfwidth: f64,
        n_tilde: usize,
    ) -> Result<Self> {
        Self::with_index_scale(k, deriv_l1, lower_frame_bound, halfwidth, n_tilde, 1.0)
    }

    pub fn with_index_scale(
        k: u32,
        deriv_l1: f64,
        lower_frame_bound: f64,
        halfwidth: f64,
        n_tilde: usize,
        index_scale: f64,
    ) -> Result<Self> {
        let check = |ok: bool, context: &str| -> Result<()> {
            if ok {
                Ok(())
            } else {
                Err(Error::InvalidParameter {
                    context: context.to_string(),
                })
            }
        };
        check(k >= 2, "smoothness order k must be at least 2")?;
        check(deriv_l1 > 0.0, "derivative L1 norm must be positive")?;
        check(lower_frame_bound > 0.0, "lower frame bound must be positive")?;
        check(halfwidth > 0.0, "interval half-width must be positive")?;
        check(n_tilde >= 1, "at least one term must be retained")?;
        check(index_scale > 0.0, "index scale must be positive")?;
        Ok(Self {
            k,
            deriv_l1,
            lower_frame_bound,
            halfwidth,
            n_tilde,
            index_scale,
        })
    }
}

/// Inputs to the higher-dimensional truncation bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HighDimBoundInput {
    pub n_dim: u32,
    pub k: u32,
    /// `L1` norm over the ball of the k-th partial derivative.
    pub partial_l1: f64,
    pub lower_frame_bound: f64,
    /// Ball radius `R`.
    pub ball_radius: f64,
    /// Tail frequency sum `sum |lambda|^{-k}` over the discarded points.
    pub lambda_tail: f64,
}

/// Which closed form produced a bound. The identifiers are part of the
/// report file format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundFormula {
    /// General interval bound.
    General,
    /// Harmonic special case (`A = 1`, `R = 1/2`, `k = 2`).
    Harmonic,
    /// Higher-dimensional ball bound.
    HighDim,
}

impl BoundFormula {
    pub fn id(&self) -> &'static str {
        match self {
            BoundFormula::General => "thm32",
            BoundFormula::Harmonic => "eq35",
            BoundFormula::HighDim => "highdim",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        match id {
            "thm32" => Some(BoundFormula::General),
            "eq35" => Some(BoundFormula::Harmonic),
            "highdim" => Some(BoundFormula::HighDim),
            _ => None,
        }
    }
}

/// Echo of the inputs a bound was computed from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundInputs {
    Interval(TruncationBoundInput),
    HighDim(HighDimBoundInput),
}

/// A computed truncation bound with its provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorBoundReport {
    pub bound: f64,
    pub formula: BoundFormula,
    pub inputs: BoundInputs,
}

/// Interval truncation bound
/// `sqrt(2R)/A * deriv_l1/(2 pi)^k * 2/((k-1)(n_tilde+1)^(k-1))`,
/// divided by `index_scale^k` when the tail indexing constant is below 1.
pub fn truncation_bound(input: &TruncationBoundInput) -> ErrorBoundReport {
    let k = input.k as i32;
    let bound = (2.0 * input.halfwidth).sqrt() / input.lower_frame_bound
        * input.deriv_l1
        / (2.0 * PI).powi(k)
        * 2.0
        / ((input.k as f64 - 1.0) * (input.n_tilde as f64 + 1.0).powi(k - 1))
        / input.index_scale.powi(k);
    ErrorBoundReport {
        bound,
        formula: BoundFormula::General,
        inputs: BoundInputs::Interval(*input),
    }
}

/// Harmonic special case: unit-length interval sampled at the integers,
/// `k = 2`, giving `deriv_l1 / (2 pi)^2 * 2 / (n_tilde + 1)`.
pub fn truncation_bound_harmonic(deriv_l1: f64, n_tilde: usize) -> Result<ErrorBoundReport> {
    let input = TruncationBoundInput::new(2, deriv_l1, 1.0, 0.5, n_tilde)?;
    let bound = deriv_l1 / (2.0 * PI).powi(2) * 2.0 / (n_tilde as f64 + 1.0);
    Ok(ErrorBoundReport {
        bound,
        formula: BoundFormula::Harmonic,
        inputs: BoundInputs::Interval(input),
    })
}

/// Higher-dimensional truncation bound
/// `sqrt(vol(B(0,R)))/A * (sqrt(n)/(2 pi))^k * partial_l1 * lambda_tail`.
pub fn highdim_truncation_bound(input: &HighDimBoundInput) -> ErrorBoundReport {
    let k = input.k as i32;
    let bound = ball_volume(input.n_dim, input.ball_radius).sqrt() / input.lower_frame_bound
        * ((input.n_dim as f64).sqrt() / (2.0 * PI)).powi(k)
        * input.partial_l1
        * input.lambda_tail;
    ErrorBoundReport {
        bound,
        formula: BoundFormula::HighDim,
        inputs: BoundInputs::HighDim(*input),
    }
}

/// Volume of the n-dimensional ball of the given radius, by the two-step
/// recurrence `V_n = V_{n-2} * 2 pi R^2 / n`.
pub fn ball_volume(n_dim: u32, radius: f64) -> f64 {
    match n_dim {
        0 => 1.0,
        1 => 2.0 * radius,
        n => ball_volume(n - 2, radius) * 2.0 * PI * radius * radius / n as f64,
    }
}

/// Empirical tail sum `sum_{i >= cutoff} |fhat_values[i]|` over labels
/// sorted by increasing frequency magnitude. Returns 0 when the cutoff
/// reaches past the list.
pub fn tail_sum(labels: &[f64], fhat_values: &[Complex64], cutoff: usize) -> f64 {
    assert_eq!(
        labels.len(),
        fhat_values.len(),
        "labels and coefficient lists must be aligned"
    );
    fhat_values
        .iter()
        .skip(cutoff)
        .map(|z| z.norm())
        .sum()
}
