//! Python bindings: frames, Parseval conversion, spiral sampling, and the
//! truncation error bounds, with complex vectors crossing the boundary as
//! plain lists of Python complex numbers.

use framecast_core::frame as core_frame;
use framecast_core::frame::Label;
use framecast_core::matrix::inner;
use framecast_core::recon as core_recon;
use framecast_core::spiral as core_spiral;
use framecast_core::{Complex64, ComplexMatrix, Error};
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::NoConvergence { .. }
        | Error::NotPositiveDefinite { .. }
        | Error::NotAFrame
        | Error::IllConditioned { .. }
        | Error::SpanMismatch { .. } => PyArithmeticError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn matrix_to_rows(m: &ComplexMatrix) -> Vec<Vec<Complex64>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// An ordered list of complex vectors in an n-dimensional space.
#[pyclass(name = "Frame", module = "framecast", skip_from_py_object)]
#[derive(Clone)]
struct PyFrame {
    inner: core_frame::Frame,
}

#[pymethods]
impl PyFrame {
    /// Frame(vectors, labels=None): vectors is a list of equal-length lists
    /// of complex numbers; labels may be floats, (x, y) pairs, or strings.
    #[new]
    #[pyo3(signature = (vectors, labels=None))]
    fn new(vectors: Vec<Vec<Complex64>>, labels: Option<Vec<PyLabel>>) -> PyResult<Self> {
        let dim = vectors.first().map(|v| v.len()).unwrap_or(0);
        let mut frame = core_frame::Frame::new(dim, &vectors).map_err(to_py_err)?;
        if let Some(labels) = labels {
            frame = frame
                .with_labels(labels.into_iter().map(|l| l.0).collect())
                .map_err(to_py_err)?;
        }
        Ok(Self { inner: frame })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "Frame({} vectors in dimension {})",
            self.inner.len(),
            self.inner.dim()
        )
    }

    /// All vectors as a list of lists of complex numbers.
    fn vectors(&self) -> Vec<Vec<Complex64>> {
        matrix_to_rows(self.inner.as_matrix())
    }

    /// A single vector.
    fn vector(&self, i: usize) -> PyResult<Vec<Complex64>> {
        if i >= self.inner.len() {
            return Err(PyValueError::new_err(format!(
                "index {i} out of range for {} vectors",
                self.inner.len()
            )));
        }
        Ok(self.inner.vector(i).to_vec())
    }

    /// Optimal frame bounds (A, B) for the ambient space.
    fn frame_bounds(&self) -> PyResult<(f64, f64)> {
        let b = core_frame::frame_bounds(&self.inner).map_err(to_py_err)?;
        Ok((b.lower, b.upper))
    }

    /// Optimal frame bounds (A, B) restricted to the span.
    fn frame_bounds_in_span(&self) -> PyResult<(f64, f64)> {
        let b = core_frame::frame_bounds_in_span(&self.inner).map_err(to_py_err)?;
        Ok((b.lower, b.upper))
    }

    /// Frame operator S = sum of outer products, as row lists.
    fn frame_operator(&self) -> Vec<Vec<Complex64>> {
        matrix_to_rows(&core_frame::frame_operator(&self.inner))
    }

    /// Closest Parseval frame; requires the vectors to span.
    fn to_parseval(&self) -> PyResult<PyParsevalResult> {
        core_frame::to_parseval(&self.inner)
            .map(|r| PyParsevalResult { inner: r })
            .map_err(to_py_err)
    }

    /// Parseval frame for the spanned subspace (which may be proper).
    fn to_parseval_in_span(&self) -> PyResult<PyParsevalResult> {
        core_frame::to_parseval_in_span(&self.inner)
            .map(|r| PyParsevalResult { inner: r })
            .map_err(to_py_err)
    }

    /// Canonical tight frame: the frame-operator inverse square root applied
    /// to every vector.
    fn canonical_tight_frame(&self) -> PyResult<PyFrame> {
        core_frame::canonical_tight_frame(&self.inner)
            .map(|f| PyFrame { inner: f })
            .map_err(to_py_err)
    }

    /// Squared vector-wise distance to another frame of the same shape.
    fn symmetric_distance(&self, other: &PyFrame) -> PyResult<f64> {
        core_frame::symmetric_distance(&self.inner, &other.inner).map_err(to_py_err)
    }

    /// Per-part Parseval conversion of a partition (list of index lists),
    /// reassembled in the original order.
    fn subframe_parseval_union(&self, partition: Vec<Vec<usize>>) -> PyResult<PyUnionParseval> {
        core_frame::subframe_parseval_union(&self.inner, &partition)
            .map(|u| PyUnionParseval { inner: u })
            .map_err(to_py_err)
    }

    /// Measurement coefficients of a coordinate vector against every frame
    /// vector (inner products, conjugate-linear in the frame vector).
    fn measure(&self, signal: Vec<Complex64>) -> PyResult<Vec<Complex64>> {
        if signal.len() != self.inner.dim() {
            return Err(PyValueError::new_err(format!(
                "signal has {} samples, frame dimension is {}",
                signal.len(),
                self.inner.dim()
            )));
        }
        Ok((0..self.inner.len())
            .map(|j| inner(&signal, self.inner.vector(j)))
            .collect())
    }
}

struct PyLabel(Label);

impl<'a, 'py> FromPyObject<'a, 'py> for PyLabel {
    type Error = PyErr;

    fn extract(ob: pyo3::Borrowed<'a, 'py, PyAny>) -> PyResult<Self> {
        if let Ok(x) = ob.extract::<f64>() {
            return Ok(PyLabel(Label::Frequency(x)));
        }
        if let Ok((x, y)) = ob.extract::<(f64, f64)>() {
            return Ok(PyLabel(Label::Point2(x, y)));
        }
        Ok(PyLabel(Label::Tag(ob.extract::<String>()?)))
    }
}

/// Output of the Parseval conversion.
#[pyclass(name = "ParsevalResult", module = "framecast")]
struct PyParsevalResult {
    inner: core_frame::ParsevalResult,
}

#[pymethods]
impl PyParsevalResult {
    /// The Parseval frame.
    #[getter]
    fn frame(&self) -> PyFrame {
        PyFrame {
            inner: self.inner.parseval.clone(),
        }
    }

    /// Matrix C with output_i = sum_j C[i][j] * input_j.
    #[getter]
    fn transfer(&self) -> Vec<Vec<Complex64>> {
        matrix_to_rows(&self.inner.transfer)
    }

    /// Dimension of the span the output is Parseval for.
    #[getter]
    fn span_dim(&self) -> usize {
        self.inner.span_dim
    }

    /// Converts measurements against the original frame into measurements
    /// against the Parseval frame.
    fn transfer_coefficients(&self, measurements: Vec<Complex64>) -> PyResult<Vec<Complex64>> {
        core_frame::transfer_coefficients(&self.inner, &measurements).map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "ParsevalResult({} vectors, span dimension {})",
            self.inner.parseval.len(),
            self.inner.span_dim
        )
    }
}

/// Output of the per-partition conversion.
#[pyclass(name = "UnionParseval", module = "framecast")]
struct PyUnionParseval {
    inner: core_frame::UnionParseval,
}

#[pymethods]
impl PyUnionParseval {
    #[getter]
    fn frame(&self) -> PyFrame {
        PyFrame {
            inner: self.inner.frame.clone(),
        }
    }

    #[getter]
    fn part_dims(&self) -> Vec<usize> {
        self.inner.part_dims.clone()
    }

    #[getter]
    fn frame_operator_deviation(&self) -> f64 {
        self.inner.frame_operator_deviation
    }

    #[getter]
    fn deviation_from_full(&self) -> f64 {
        self.inner.deviation_from_full
    }

    #[getter]
    fn coincides_with_full(&self) -> bool {
        self.inner.coincides_with_full
    }
}

/// A chosen set of frequency sample points.
#[pyclass(name = "SamplePointSet", module = "framecast", skip_from_py_object)]
#[derive(Clone)]
struct PySamplePointSet {
    inner: core_spiral::SamplePointSet,
}

#[pymethods]
impl PySamplePointSet {
    /// SamplePointSet(points): wraps externally chosen 1-D or 2-D points.
    #[new]
    fn new(points: Vec<Vec<f64>>) -> PyResult<Self> {
        core_spiral::SamplePointSet::from_points(points)
            .map(|inner| Self { inner })
            .map_err(to_py_err)
    }

    #[getter]
    fn points(&self) -> Vec<Vec<f64>> {
        self.inner.points.clone()
    }

    #[getter]
    fn thetas(&self) -> Option<Vec<f64>> {
        self.inner.thetas.clone()
    }

    #[getter]
    fn min_separation(&self) -> f64 {
        self.inner.min_separation
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }
}

fn parse_mode(mode: &str) -> PyResult<core_spiral::ArcLengthMode> {
    match mode {
        "paper" => Ok(core_spiral::ArcLengthMode::Quadratic),
        "exact" => Ok(core_spiral::ArcLengthMode::Exact),
        other => Err(PyValueError::new_err(format!(
            "unknown arc-length mode {other:?} (expected 'paper' or 'exact')"
        ))),
    }
}

/// Point on the spiral of the given pitch at parameter theta.
#[pyfunction]
fn spiral_point(c: f64, theta: f64) -> (f64, f64) {
    let p = core_spiral::spiral_point(c, theta);
    (p[0], p[1])
}

/// Curve length between two spiral parameters.
#[pyfunction]
#[pyo3(signature = (c, theta1, theta2, mode="paper"))]
fn arc_length(c: f64, theta1: f64, theta2: f64, mode: &str) -> PyResult<f64> {
    core_spiral::arc_length(c, theta1, theta2, parse_mode(mode)?).map_err(to_py_err)
}

/// Greedy selection of spiral sample points under the admissibility
/// inequalities; every consecutive arc gap stays below 2*delta.
#[pyfunction]
#[pyo3(signature = (c, ball_radius, delta, count, mode="paper"))]
fn select_spiral_points(
    c: f64,
    ball_radius: f64,
    delta: f64,
    count: usize,
    mode: &str,
) -> PyResult<PySamplePointSet> {
    let spec = core_spiral::SpiralSpec::new(c, ball_radius, delta).map_err(to_py_err)?;
    core_spiral::select_spiral_points(&spec, core_spiral::SpiralStop::Count(count), parse_mode(mode)?)
        .map(|inner| PySamplePointSet { inner })
        .map_err(to_py_err)
}

/// Grid estimate of the covering radius; returns (rho_hat, region_radius,
/// product, satisfies_covering).
#[pyfunction]
#[pyo3(signature = (points, ball_radius, grid_density=200))]
fn covering_radius(
    points: &PySamplePointSet,
    ball_radius: f64,
    grid_density: usize,
) -> PyResult<(f64, f64, f64, bool)> {
    if grid_density < 10 {
        return Err(PyValueError::new_err("grid_density must be at least 10"));
    }
    let r = core_spiral::covering_radius(&points.inner, ball_radius, grid_density);
    Ok((r.rho_hat, r.region_radius, r.product, r.satisfies_covering))
}

/// Exponential frame on an interval through its exact sinc Gram matrix;
/// returns (frame, gram) with the Gram as row lists.
#[pyfunction]
#[pyo3(signature = (lambdas, halfwidth=0.5))]
fn interval_exponential_frame(
    lambdas: Vec<f64>,
    halfwidth: f64,
) -> PyResult<(PyFrame, Vec<Vec<Complex64>>)> {
    let ef = core_spiral::interval_exponential_frame(&lambdas, halfwidth).map_err(to_py_err)?;
    Ok((PyFrame { inner: ef.frame }, matrix_to_rows(&ef.gram)))
}

/// Frame of exponentials sampled on the polar midpoint grid of a disk.
#[pyfunction]
#[pyo3(signature = (points, radius, subdivisions))]
fn disk_grid_frame(
    points: &PySamplePointSet,
    radius: f64,
    subdivisions: usize,
) -> PyResult<PyFrame> {
    // Negated comparison so NaN fails the check too.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if subdivisions == 0 || !(radius > 0.0) {
        return Err(PyValueError::new_err(
            "the grid needs a positive radius and at least one subdivision",
        ));
    }
    let grid = core_spiral::DiskGrid::polar_midpoints(radius, subdivisions);
    core_spiral::disk_grid_frame(&points.inner, &grid)
        .map(|inner| PyFrame { inner })
        .map_err(to_py_err)
}

/// Synthesis reconstruction sum_i coefficients[i] * frame_vector_i (exact
/// for Parseval frames).
#[pyfunction]
fn reconstruct(frame: &PyFrame, coefficients: Vec<Complex64>) -> PyResult<Vec<Complex64>> {
    core_recon::reconstruct(&frame.inner, &coefficients).map_err(to_py_err)
}

/// Dual-frame reconstruction through the frame-operator inverse.
#[pyfunction]
fn reconstruct_dual(frame: &PyFrame, coefficients: Vec<Complex64>) -> PyResult<Vec<Complex64>> {
    core_recon::reconstruct_dual(&frame.inner, &coefficients).map_err(to_py_err)
}

/// Truncated dual reconstruction keeping the first n_tilde terms; returns
/// (f_tilde, tail_norm).
#[pyfunction]
fn truncate_split(
    frame: &PyFrame,
    coefficients: Vec<Complex64>,
    n_tilde: usize,
) -> PyResult<(Vec<Complex64>, f64)> {
    core_recon::truncate_split(&frame.inner, &coefficients, n_tilde).map_err(to_py_err)
}

/// Pointwise Fourier decay bound deriv_l1 / (2 pi |lambda|)^k.
#[pyfunction]
fn fourier_decay_bound(k: u32, deriv_l1: f64, lambda_abs: f64) -> PyResult<f64> {
    if k < 1 || lambda_abs <= 0.0 {
        return Err(PyValueError::new_err(
            "k must be at least 1 and lambda_abs positive",
        ));
    }
    Ok(core_recon::fourier_decay_bound(k, deriv_l1, lambda_abs))
}

/// Higher-dimensional pointwise decay bound.
#[pyfunction]
fn highdim_decay_bound(n_dim: u32, k: u32, partial_l1: f64, lambda_norm: f64) -> PyResult<f64> {
    if n_dim < 1 || k < 1 || lambda_norm <= 0.0 {
        return Err(PyValueError::new_err(
            "n_dim and k must be at least 1 and lambda_norm positive",
        ));
    }
    Ok(core_recon::highdim_decay_bound(n_dim, k, partial_l1, lambda_norm))
}

/// Interval truncation bound for a signal with k integrable derivatives.
#[pyfunction]
#[pyo3(signature = (k, deriv_l1, n_tilde, lower_frame_bound=1.0, halfwidth=0.5, index_scale=1.0))]
fn truncation_bound(
    k: u32,
    deriv_l1: f64,
    n_tilde: usize,
    lower_frame_bound: f64,
    halfwidth: f64,
    index_scale: f64,
) -> PyResult<f64> {
    let input = core_recon::TruncationBoundInput::with_index_scale(
        k,
        deriv_l1,
        lower_frame_bound,
        halfwidth,
        n_tilde,
        index_scale,
    )
    .map_err(to_py_err)?;
    Ok(core_recon::truncation_bound(&input).bound)
}

/// Harmonic special case of the truncation bound.
#[pyfunction]
fn truncation_bound_harmonic(deriv_l1: f64, n_tilde: usize) -> PyResult<f64> {
    core_recon::truncation_bound_harmonic(deriv_l1, n_tilde)
        .map(|r| r.bound)
        .map_err(to_py_err)
}

/// Empirical tail sum of |fhat| beyond a cutoff index.
#[pyfunction]
fn tail_sum(labels: Vec<f64>, fhat_values: Vec<Complex64>, cutoff: usize) -> PyResult<f64> {
    if labels.len() != fhat_values.len() {
        return Err(PyValueError::new_err(
            "labels and fhat_values must be aligned",
        ));
    }
    Ok(core_recon::tail_sum(&labels, &fhat_values, cutoff))
}

/// Volume of the n-dimensional ball.
#[pyfunction]
fn ball_volume(n_dim: u32, radius: f64) -> f64 {
    core_recon::ball_volume(n_dim, radius)
}

/// sin(pi x) / (pi x).
#[pyfunction]
fn sinc(x: f64) -> f64 {
    core_spiral::sinc(x)
}

#[pymodule]
fn framecast(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFrame>()?;
    m.add_class::<PyParsevalResult>()?;
    m.add_class::<PyUnionParseval>()?;
    m.add_class::<PySamplePointSet>()?;
    m.add_function(wrap_pyfunction!(spiral_point, m)?)?;
    m.add_function(wrap_pyfunction!(arc_length, m)?)?;
    m.add_function(wrap_pyfunction!(select_spiral_points, m)?)?;
    m.add_function(wrap_pyfunction!(covering_radius, m)?)?;
    m.add_function(wrap_pyfunction!(interval_exponential_frame, m)?)?;
    m.add_function(wrap_pyfunction!(disk_grid_frame, m)?)?;
    m.add_function(wrap_pyfunction!(reconstruct, m)?)?;
    m.add_function(wrap_pyfunction!(reconstruct_dual, m)?)?;
    m.add_function(wrap_pyfunction!(truncate_split, m)?)?;
    m.add_function(wrap_pyfunction!(fourier_decay_bound, m)?)?;
    m.add_function(wrap_pyfunction!(highdim_decay_bound, m)?)?;
    m.add_function(wrap_pyfunction!(truncation_bound, m)?)?;
    m.add_function(wrap_pyfunction!(truncation_bound_harmonic, m)?)?;
    m.add_function(wrap_pyfunction!(tail_sum, m)?)?;
    m.add_function(wrap_pyfunction!(ball_volume, m)?)?;
    m.add_function(wrap_pyfunction!(sinc, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
