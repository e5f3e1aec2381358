//! Finite frames, frame operators and bounds, and the Parseval conversion.
//!
//! The conversion pipeline is:
//!
//! 1. pivoted Gram-Schmidt on the frame vectors yields an orthonormal basis
//!    of the span together with the coefficient matrix `M`
//!    (`f_i = sum_k M[i][k] e_k`);
//! 2. the synthesis operator in that basis is `T = M^T`;
//! 3. the polar decomposition `T = W |T|` extracts the partial isometry `W`;
//! 4. the output vectors are `g_i = sum_k W[k][i] e_k`, i.e. the rows of
//!    `W^T` applied to the basis.
//!
//! The result is the Parseval frame minimizing `sum_j ||g_j - f_j||^2`, and
//! it coincides with the canonical tight frame `{S^{-1/2} f_j}`. Every `g_i`
//! is an explicit linear combination of the original frame vectors; the
//! combination matrix is returned so that measurement coefficients taken
//! against the original frame transfer to the Parseval frame without being
//! re-acquired.

use crate::error::{Error, Result};
use crate::linalg::{gram_schmidt, herm_eig, herm_inv_sqrt, polar_decompose};
use crate::matrix::vec_norm;
use crate::{tol, Complex64, ComplexMatrix};

/// Label attached to a frame vector: the frequency (or frequency point) it
/// came from, or a free-form tag.
#[derive(Debug, Clone, PartialEq)]
pub enum Label {
    Frequency(f64),
    Point2(f64, f64),
    Tag(String),
}

/// An ordered list of vectors in an n-dimensional complex coordinate space,
/// with optional provenance metadata.
///
/// The frame property (positive lower bound) is checked on demand by
/// [`frame_bounds`], not stored as an invariant.
#[derive(Debug, Clone)]
pub struct Frame {
    vectors: ComplexMatrix,
    labels: Option<Vec<Label>>,
    basis_note: Option<String>,
}

impl Frame {
    /// Builds a frame from its vectors (rows of `vectors`).
    pub fn from_matrix(vectors: ComplexMatrix) -> Self {
        Self {
            vectors,
            labels: None,
            basis_note: None,
        }
    }

    /// Builds a frame from vector rows, checking that all have length `dim`.
    pub fn new(dim: usize, rows: &[Vec<Complex64>]) -> Result<Self> {
        let vectors = ComplexMatrix::from_rows(rows)?;
        if vectors.cols() != dim {
            return Err(Error::ShapeMismatch {
                context: format!("vectors have length {}, expected {dim}", vectors.cols()),
            });
        }
        Ok(Self::from_matrix(vectors))
    }

    pub fn with_labels(mut self, labels: Vec<Label>) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::ShapeMismatch {
                context: format!(
                    "{} labels for {} vectors",
                    labels.len(),
                    self.len()
                ),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn with_basis_note(mut self, note: impl Into<String>) -> Self {
        self.basis_note = Some(note.into());
        self
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.vectors.cols()
    }

    /// Number of frame vectors.
    pub fn len(&self) -> usize {
        self.vectors.rows()
    }

    pub fn is_empty(&self) -> bool {
        false // a frame always holds at least one vector
    }

    pub fn vector(&self, i: usize) -> &[Complex64] {
        self.vectors.row(i)
    }

    pub fn as_matrix(&self) -> &ComplexMatrix {
        &self.vectors
    }

    pub fn labels(&self) -> Option<&[Label]> {
        self.labels.as_deref()
    }

    pub fn basis_note(&self) -> Option<&str> {
        self.basis_note.as_deref()
    }

    /// Frame obtained by keeping the rows at `indices`, preserving labels.
    pub fn subframe(&self, indices: &[usize]) -> Result<Frame> {
        if indices.is_empty() {
            return Err(Error::PartitionInvalid {
                reason: "empty part".into(),
            });
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.len()) {
            return Err(Error::PartitionInvalid {
                reason: format!("index {bad} out of range for {} vectors", self.len()),
            });
        }
        let rows: Vec<Vec<Complex64>> = indices.iter().map(|&i| self.vector(i).to_vec()).collect();
        let labels = self
            .labels
            .as_ref()
            .map(|ls| indices.iter().map(|&i| ls[i].clone()).collect());
        let mut f = Frame::from_matrix(ComplexMatrix::from_rows(&rows)?);
        f.labels = labels;
        Ok(f)
    }
}

/// Optimal frame bounds: the extreme eigenvalues of the frame operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameBounds {
    pub lower: f64,
    pub upper: f64,
}

/// Synthesis matrix of `frame` with respect to the orthonormal rows of `onb`:
/// column `j` holds the coefficients of vector `j` in that basis.
///
/// Fails with [`Error::SpanMismatch`] when some vector has a relative
/// residual above [`tol::DEFAULT`] outside the basis span.
pub fn synthesis_matrix(frame: &Frame, onb: &ComplexMatrix) -> Result<ComplexMatrix> {
    if onb.cols() != frame.dim() {
        return Err(Error::ShapeMismatch {
            context: format!(
                "basis vectors have length {}, frame dimension is {}",
                onb.cols(),
                frame.dim()
            ),
        });
    }
    // T = conj(onb) * frame^T computes T[k][j] = <f_j, e_k>.
    let t = onb.conj().mul(&frame.as_matrix().transpose());
    // Residual check: || f_j - sum_k T[k][j] e_k || <= tol * ||f_j||.
    let back = t.transpose().mul(onb);
    for j in 0..frame.len() {
        let fj = frame.vector(j);
        let norm = vec_norm(fj);
        let residual: f64 = fj
            .iter()
            .zip(back.row(j))
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        if residual > tol::DEFAULT * norm.max(1e-300) {
            return Err(Error::SpanMismatch {
                index: j,
                residual: residual / norm.max(1e-300),
            });
        }
    }
    Ok(t)
}

/// Frame operator `S = sum_k f_k f_k^*` (ambient `n x n`, Hermitian PSD).
pub fn frame_operator(frame: &Frame) -> ComplexMatrix {
    let f = frame.as_matrix();
    // S = F^T * conj(F) for row-stacked vectors.
    f.transpose().mul(&f.conj())
}

/// Optimal frame bounds for the ambient space.
///
/// Fails with [`Error::NotAFrame`] when the vectors cannot span (fewer
/// vectors than dimensions) or the smallest eigenvalue of the frame operator
/// is at or below [`tol::RANK`] times the largest.
pub fn frame_bounds(frame: &Frame) -> Result<FrameBounds> {
    if frame.len() < frame.dim() {
        return Err(Error::NotAFrame);
    }
    let eig = herm_eig(&frame_operator(frame))?;
    let lower = eig.values[0];
    let upper = eig.values[eig.values.len() - 1];
    if lower <= tol::RANK * upper {
        return Err(Error::NotAFrame);
    }
    Ok(FrameBounds { lower, upper })
}

/// Optimal frame bounds restricted to the span of the frame: the extreme
/// nonzero eigenvalues of the frame operator, computed through the Gram
/// matrix (so the cost scales with the number of vectors, not the ambient
/// dimension).
pub fn frame_bounds_in_span(frame: &Frame) -> Result<FrameBounds> {
    let f = frame.as_matrix();
    // Gram G[i][j] = <f_i, f_j> shares the nonzero spectrum of S.
    let gram = f.mul(&f.adjoint());
    let eig = herm_eig(&gram)?;
    let upper = eig.values[eig.values.len() - 1];
    let lower = eig
        .values
        .iter()
        .copied()
        .filter(|&v| v > tol::RANK * upper)
        .fold(f64::INFINITY, f64::min);
    if !lower.is_finite() || upper <= 0.0 {
        return Err(Error::NotAFrame);
    }
    Ok(FrameBounds { lower, upper })
}

/// Output of the Parseval conversion.
#[derive(Debug, Clone)]
pub struct ParsevalResult {
    /// The Parseval frame; same vector count and labels as the input.
    pub parseval: Frame,
    /// `m x m` matrix `C` with `g_i = sum_j C[i][j] f_j`.
    pub transfer: ComplexMatrix,
    /// Orthonormal basis of the span used internally (rows).
    pub onb_used: ComplexMatrix,
    /// The partial isometry from the polar decomposition (`rank x m`).
    pub w: ComplexMatrix,
    /// Dimension of the span the output is Parseval for.
    pub span_dim: usize,
}

/// Converts a spanning frame into its closest Parseval frame.
///
/// Fails with [`Error::NotAFrame`] when the vectors do not span the ambient
/// space; use [`to_parseval_in_span`] to accept a Parseval frame for the
/// spanned subspace instead.
pub fn to_parseval(frame: &Frame) -> Result<ParsevalResult> {
    let result = to_parseval_in_span(frame)?;
    if result.span_dim < frame.dim() {
        return Err(Error::NotAFrame);
    }
    Ok(result)
}

/// Converts a frame into the Parseval frame for its span, which may be a
/// proper subspace of the ambient space. `span_dim` records the subspace
/// dimension.
pub fn to_parseval_in_span(frame: &Frame) -> Result<ParsevalResult> {
    let gs = gram_schmidt(frame.as_matrix(), tol::RANK)?;
    let rank = gs.rank();
    // Synthesis operator in the Gram-Schmidt basis; plain transpose, the
    // coefficient matrix is not conjugated.
    let t = gs.coeffs.transpose();
    let polar = polar_decompose(&t)?;
    let w = polar.w;
    // g_i = sum_k W[k][i] e_k.
    let parseval_rows = w.transpose().mul(&gs.onb);

    // Transfer C = W^T * R, with R expressing each basis vector through the
    // pivot frame vectors, makes every g an explicit combination of the f's.
    let r = gs.basis_in_input_terms(frame.len());
    let transfer = w.transpose().mul(&r);

    let mut parseval = Frame::from_matrix(parseval_rows);
    parseval.labels = frame.labels.clone();
    parseval.basis_note = frame.basis_note.clone();
    Ok(ParsevalResult {
        parseval,
        transfer,
        onb_used: gs.onb,
        w,
        span_dim: rank,
    })
}

/// Canonical tight frame `{S^{-1/2} f_k}`.
///
/// Requires a spanning frame; [`Error::NotPositiveDefinite`] propagates from
/// the inverse square root otherwise.
pub fn canonical_tight_frame(frame: &Frame) -> Result<Frame> {
    let s = frame_operator(frame);
    let tol_psd = tol::RANK * s.frobenius_norm();
    let inv_sqrt = herm_inv_sqrt(&s, tol_psd)?;
    // Row-stacked: g_i = (S^{-1/2} f_i)^T = f_i^T * (S^{-1/2})^T.
    let rows = frame.as_matrix().mul(&inv_sqrt.transpose());
    let mut out = Frame::from_matrix(rows);
    out.labels = frame.labels.clone();
    out.basis_note = frame.basis_note.clone();
    Ok(out)
}

/// Squared vector-wise distance `sum_j ||a_j - b_j||^2` between two frames of
/// equal shape.
pub fn symmetric_distance(a: &Frame, b: &Frame) -> Result<f64> {
    if a.len() != b.len() || a.dim() != b.dim() {
        return Err(Error::ShapeMismatch {
            context: format!(
                "frames of shape {}x{} and {}x{}",
                a.len(),
                a.dim(),
                b.len(),
                b.dim()
            ),
        });
    }
    Ok(a.as_matrix()
        .frobenius_distance(b.as_matrix())
        .powi(2))
}

/// Output of [`subframe_parseval_union`].
#[derive(Debug, Clone)]
pub struct UnionParseval {
    /// The union frame, with each part's Parseval vectors at the original
    /// index positions.
    pub frame: Frame,
    /// Span dimension of each part, in partition order.
    pub part_dims: Vec<usize>,
    /// `|| S_union - I ||_F` in ambient coordinates.
    pub frame_operator_deviation: f64,
    /// `sqrt(sum_j ||union_j - full_j||^2)` against the whole-frame Parseval
    /// conversion.
    pub deviation_from_full: f64,
    /// Whether the union coincides with the whole-frame conversion to 1e-8.
    pub coincides_with_full: bool,
}

/// Tolerance at which the union is declared to coincide with the full
/// conversion.
pub const COINCIDENCE_TOL: f64 = 1e-8;

/// Converts each part of a partition to its subspace Parseval frame and
/// reassembles the union.
///
/// The partition must cover every index exactly once, and the span dimensions
/// of the parts must sum to the ambient dimension. The union's frame operator
/// deviation from the identity and its distance from the whole-frame
/// conversion are measured and reported, not assumed.
pub fn subframe_parseval_union(frame: &Frame, partition: &[Vec<usize>]) -> Result<UnionParseval> {
    let m = frame.len();
    let mut seen = vec![false; m];
    for part in partition {
        for &i in part {
            if i >= m {
                return Err(Error::PartitionInvalid {
                    reason: format!("index {i} out of range for {m} vectors"),
                });
            }
            if seen[i] {
                return Err(Error::PartitionInvalid {
                    reason: format!("index {i} appears twice"),
                });
            }
            seen[i] = true;
        }
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return Err(Error::PartitionInvalid {
            reason: format!("index {missing} is not covered"),
        });
    }

    let mut rows: Vec<Vec<Complex64>> = vec![Vec::new(); m];
    let mut part_dims = Vec::with_capacity(partition.len());
    for part in partition {
        let sub = frame.subframe(part)?;
        let res = to_parseval_in_span(&sub)?;
        part_dims.push(res.span_dim);
        for (local, &original) in part.iter().enumerate() {
            rows[original] = res.parseval.vector(local).to_vec();
        }
    }
    let dims_sum: usize = part_dims.iter().sum();
    if dims_sum != frame.dim() {
        return Err(Error::DirectSumViolated {
            got: dims_sum,
            expected: frame.dim(),
        });
    }
    // The dimension count alone misses overlapping subspaces; the direct-sum
    // condition also needs the parts to span jointly.
    let union_rank = gram_schmidt(&ComplexMatrix::from_rows(&rows)?, tol::RANK)?.rank();
    if union_rank < frame.dim() {
        return Err(Error::DirectSumViolated {
            got: union_rank,
            expected: frame.dim(),
        });
    }

    let mut union = Frame::from_matrix(ComplexMatrix::from_rows(&rows)?);
    union.labels = frame.labels.clone();

    let frame_operator_deviation = frame_operator(&union).identity_defect();
    let full = to_parseval_in_span(frame)?;
    let deviation_from_full = symmetric_distance(&union, &full.parseval)?.sqrt();

    Ok(UnionParseval {
        frame: union,
        part_dims,
        frame_operator_deviation,
        deviation_from_full,
        coincides_with_full: deviation_from_full <= COINCIDENCE_TOL,
    })
}

/// Transfers measurement coefficients taken against the original frame to
/// coefficients against the Parseval frame:
/// `<f, g_i> = sum_j conj(C[i][j]) <f, f_j>`.
pub fn transfer_coefficients(
    result: &ParsevalResult,
    measurements: &[Complex64],
) -> Result<Vec<Complex64>> {
    let m = result.transfer.rows();
    if measurements.len() != m {
        return Err(Error::ShapeMismatch {
            context: format!("{} measurements for {} frame vectors", measurements.len(), m),
        });
    }
    Ok((0..m)
        .map(|i| {
            result
                .transfer
                .row(i)
                .iter()
                .zip(measurements)
                .map(|(c, y)| c.conj() * y)
                .sum()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::inner;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn e1e1e2() -> Frame {
        Frame::new(
            2,
            &[
                vec![c(1.0, 0.0), c(0.0, 0.0)],
                vec![c(1.0, 0.0), c(0.0, 0.0)],
                vec![c(0.0, 0.0), c(1.0, 0.0)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn frame_operator_of_repeated_basis() {
        let s = frame_operator(&e1e1e2());
        assert!((s[(0, 0)] - c(2.0, 0.0)).norm() < 1e-15);
        assert!((s[(1, 1)] - c(1.0, 0.0)).norm() < 1e-15);
        assert!(s[(0, 1)].norm() < 1e-15);
    }

    #[test]
    fn bounds_of_repeated_basis() {
        let b = frame_bounds(&e1e1e2()).unwrap();
        assert!((b.lower - 1.0).abs() < 1e-14);
        assert!((b.upper - 2.0).abs() < 1e-14);
    }

    #[test]
    fn bounds_of_orthonormal_basis_are_one() {
        let f = Frame::from_matrix(ComplexMatrix::identity(3));
        let b = frame_bounds(&f).unwrap();
        assert!((b.lower - 1.0).abs() < 1e-14);
        assert!((b.upper - 1.0).abs() < 1e-14);
    }

    #[test]
    fn too_few_vectors_is_not_a_frame() {
        let f = Frame::new(2, &[vec![c(1.0, 0.0), c(0.0, 0.0)]]).unwrap();
        assert!(matches!(frame_bounds(&f), Err(Error::NotAFrame)));
    }

    #[test]
    fn synthesis_of_frame_against_itself_is_identity() {
        let f = Frame::from_matrix(ComplexMatrix::identity(3));
        let t = synthesis_matrix(&f, f.as_matrix()).unwrap();
        assert!(t.identity_defect() < 1e-14);
    }

    #[test]
    fn synthesis_rejects_vectors_outside_span() {
        let f = Frame::new(
            2,
            &[vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(1.0, 0.0)]],
        )
        .unwrap();
        let onb = ComplexMatrix::from_rows(&[vec![c(1.0, 0.0), c(0.0, 0.0)]]).unwrap();
        assert!(matches!(
            synthesis_matrix(&f, &onb),
            Err(Error::SpanMismatch { index: 1, .. })
        ));
    }

    #[test]
    fn parseval_of_onb_is_identity() {
        let f = Frame::from_matrix(ComplexMatrix::identity(4));
        let res = to_parseval(&f).unwrap();
        assert!(res
            .parseval
            .as_matrix()
            .frobenius_distance(&ComplexMatrix::identity(4))
            < 1e-12);
        assert!(res.transfer.identity_defect() < 1e-12);
        assert_eq!(res.span_dim, 4);
    }

    #[test]
    fn parseval_output_has_identity_frame_operator() {
        let f = e1e1e2();
        let res = to_parseval(&f).unwrap();
        assert!(frame_operator(&res.parseval).identity_defect() < 1e-12);
        // Transfer reproduces the output from the input rows.
        let back = res.transfer.mul(f.as_matrix());
        assert!(back.frobenius_distance(res.parseval.as_matrix()) < 1e-12);
    }

    #[test]
    fn canonical_tight_frame_of_repeated_basis() {
        let g = canonical_tight_frame(&e1e1e2()).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((g.vector(0)[0] - c(s, 0.0)).norm() < 1e-14);
        assert!((g.vector(1)[0] - c(s, 0.0)).norm() < 1e-14);
        assert!((g.vector(2)[1] - c(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn canonical_tight_frame_requires_span() {
        let f = Frame::new(
            2,
            &[vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(2.0, 0.0), c(0.0, 0.0)]],
        )
        .unwrap();
        assert!(matches!(
            canonical_tight_frame(&f),
            Err(Error::NotPositiveDefinite { .. })
        ));
    }

    #[test]
    fn symmetric_distance_basics() {
        let a = Frame::new(1, &[vec![c(1.0, 0.0)]]).unwrap();
        let b = Frame::new(1, &[vec![c(-1.0, 0.0)]]).unwrap();
        assert_eq!(symmetric_distance(&a, &a).unwrap(), 0.0);
        assert!((symmetric_distance(&a, &b).unwrap() - 4.0).abs() < 1e-15);
        let wide = Frame::new(2, &[vec![c(1.0, 0.0), c(0.0, 0.0)]]).unwrap();
        assert!(matches!(
            symmetric_distance(&a, &wide),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn transfer_coefficients_reconstruct_without_new_measurements() {
        // Random-ish spanning frame in C^2; f = f_0 measured against the f's.
        let f = Frame::new(
            2,
            &[
                vec![c(1.0, 0.2), c(0.3, -0.4)],
                vec![c(0.0, 1.0), c(1.0, 0.0)],
                vec![c(0.5, 0.5), c(-1.0, 0.25)],
            ],
        )
        .unwrap();
        let res = to_parseval(&f).unwrap();
        let target = f.vector(0);
        let measurements: Vec<Complex64> = (0..f.len())
            .map(|j| inner(target, f.vector(j)))
            .collect();
        let parseval_coeffs = transfer_coefficients(&res, &measurements).unwrap();
        // f = sum_i <f, g_i> g_i.
        let mut recon = [Complex64::ZERO; 2];
        for (i, ci) in parseval_coeffs.iter().enumerate() {
            for (r, g) in recon.iter_mut().zip(res.parseval.vector(i)) {
                *r += ci * g;
            }
        }
        let err: f64 = recon
            .iter()
            .zip(target)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        assert!(err < 1e-12, "reconstruction error {err:.3e}");
    }

    #[test]
    fn union_of_singletons_of_orthogonal_basis() {
        // Orthogonal, not normalized: parts must normalize, and the union
        // coincides with the full conversion.
        let f = Frame::new(
            2,
            &[vec![c(2.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(0.5, 0.0)]],
        )
        .unwrap();
        let u = subframe_parseval_union(&f, &[vec![0], vec![1]]).unwrap();
        assert!((u.frame.vector(0)[0] - c(1.0, 0.0)).norm() < 1e-12);
        assert!((u.frame.vector(1)[1] - c(1.0, 0.0)).norm() < 1e-12);
        assert!(u.frame_operator_deviation < 1e-12);
        assert!(u.coincides_with_full, "deviation {}", u.deviation_from_full);
    }

    #[test]
    fn union_rejects_bad_partitions() {
        let f = Frame::from_matrix(ComplexMatrix::identity(2));
        assert!(matches!(
            subframe_parseval_union(&f, &[vec![0], vec![0, 1]]),
            Err(Error::PartitionInvalid { .. })
        ));
        assert!(matches!(
            subframe_parseval_union(&f, &[vec![0]]),
            Err(Error::PartitionInvalid { .. })
        ));
        assert!(matches!(
            subframe_parseval_union(&f, &[vec![0, 1], vec![2]]),
            Err(Error::PartitionInvalid { .. })
        ));
    }

    #[test]
    fn union_detects_dimension_count_violation() {
        // Two 1-dimensional parts cannot sum to a 3-dimensional space.
        let f = Frame::new(
            3,
            &[
                vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
                vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
            ],
        )
        .unwrap();
        assert!(matches!(
            subframe_parseval_union(&f, &[vec![0], vec![1]]),
            Err(Error::DirectSumViolated { got: 2, expected: 3 })
        ));
    }

    #[test]
    fn union_detects_overlapping_subspaces() {
        // Both parts span the same line in C^2: dimensions sum to 2 but the
        // union only spans one dimension.
        let f = Frame::new(
            2,
            &[vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(2.0, 0.0), c(0.0, 0.0)]],
        )
        .unwrap();
        assert!(matches!(
            subframe_parseval_union(&f, &[vec![0], vec![1]]),
            Err(Error::DirectSumViolated { got: 1, expected: 2 })
        ));
    }

    #[test]
    fn subspace_frame_gets_parseval_frame_for_its_span() {
        // Two vectors spanning a plane inside C^3.
        let f = Frame::new(
            3,
            &[
                vec![c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
                vec![c(0.0, 0.0), c(1.0, 1.0), c(0.0, 0.0)],
            ],
        )
        .unwrap();
        assert!(matches!(to_parseval(&f), Err(Error::NotAFrame)));
        let res = to_parseval_in_span(&f).unwrap();
        assert_eq!(res.span_dim, 2);
        let b = frame_bounds_in_span(&res.parseval).unwrap();
        assert!((b.lower - 1.0).abs() < 1e-10);
        assert!((b.upper - 1.0).abs() < 1e-10);
    }
}
