//! Hermitian eigendecomposition, matrix functions built on it, and a
//! complex Cholesky factorization.

use super::jacobi_rotation;
use crate::error::{Error, Result};
use crate::{tol, Complex64, ComplexMatrix};

/// Eigendecomposition `s = q * diag(values) * q^*` of a Hermitian matrix.
///
/// Eigenvalues are real and sorted ascending; `q` columns are the matching
/// orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct HermitianEig {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

/// Cyclic Jacobi eigenvalue iteration for Hermitian matrices.
///
/// The strictly non-Hermitian part of the input is discarded up front
/// (the iteration works on `(s + s^*)/2`).
pub fn herm_eig(s: &ComplexMatrix) -> Result<HermitianEig> {
    assert_eq!(s.rows(), s.cols(), "eigendecomposition needs a square matrix");
    let n = s.rows();
    let mut h = symmetrize(s);
    let mut q = ComplexMatrix::identity(n);

    // The per-pair threshold is relative to the paired diagonal entries, so
    // small eigenvalues keep high relative accuracy. Pairs living entirely in
    // a numerically-zero block are deflated outright; without that escape the
    // graded test never releases round-off noise between zero eigenvalues.
    let deflate = tol::RANK * h.frobenius_norm();

    let mut converged = false;
    for _sweep in 0..tol::JACOBI_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q_idx in (p + 1)..n {
                let hpq_norm = h[(p, q_idx)].norm();
                let hpp = h[(p, p)].re;
                let hqq = h[(q_idx, q_idx)].re;
                if hpq_norm == 0.0
                    || (hpp.abs() <= deflate && hqq.abs() <= deflate && hpq_norm <= deflate)
                    || hpq_norm * hpq_norm
                        <= tol::JACOBI_EPS * tol::JACOBI_EPS * (hpp * hqq).abs()
                {
                    continue;
                }
                rotated = true;
                let (c, s, phase) = jacobi_rotation(hpp, hqq, h[(p, q_idx)]);
                apply_similarity(&mut h, p, q_idx, c, s, phase);
                apply_right_rotation(&mut q, p, q_idx, c, s, phase);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            sweeps: tol::JACOBI_SWEEPS,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| h[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).unwrap());

    let values = order.iter().map(|&i| diag[i]).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| q[(i, order[j])]);
    Ok(HermitianEig { values, vectors })
}

fn symmetrize(s: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::from_fn(s.rows(), s.cols(), |i, j| {
        0.5 * (s[(i, j)] + s[(j, i)].conj())
    })
}

/// `h <- j^* h j` for the Jacobi rotation acting on plane (p, q).
fn apply_similarity(h: &mut ComplexMatrix, p: usize, q: usize, c: f64, s: f64, phase: Complex64) {
    let n = h.rows();
    // Column update: h <- h j.
    for k in 0..n {
        let hkp = h[(k, p)];
        let hkq = h[(k, q)];
        h[(k, p)] = c * hkp - s * phase.conj() * hkq;
        h[(k, q)] = s * phase * hkp + c * hkq;
    }
    // Row update: h <- j^* h.
    for k in 0..n {
        let hpk = h[(p, k)];
        let hqk = h[(q, k)];
        h[(p, k)] = c * hpk - s * phase * hqk;
        h[(q, k)] = s * phase.conj() * hpk + c * hqk;
    }
    // The rotation zeroes this pair exactly in exact arithmetic.
    h[(p, q)] = Complex64::ZERO;
    h[(q, p)] = Complex64::ZERO;
    h[(p, p)] = Complex64::new(h[(p, p)].re, 0.0);
    h[(q, q)] = Complex64::new(h[(q, q)].re, 0.0);
}

/// `q <- q j` (accumulates eigenvectors).
fn apply_right_rotation(q: &mut ComplexMatrix, p: usize, qi: usize, c: f64, s: f64, phase: Complex64) {
    let n = q.rows();
    for k in 0..n {
        let qkp = q[(k, p)];
        let qkq = q[(k, qi)];
        q[(k, p)] = c * qkp - s * phase.conj() * qkq;
        q[(k, qi)] = s * phase * qkp + c * qkq;
    }
}

/// Inverse square root `s^{-1/2}` of a Hermitian positive definite matrix.
///
/// Fails with [`Error::NotPositiveDefinite`] when any eigenvalue is at or
/// below `tol_psd` (an absolute threshold). The result is exactly Hermitian.
pub fn herm_inv_sqrt(s: &ComplexMatrix, tol_psd: f64) -> Result<ComplexMatrix> {
    let eig = herm_eig(s)?;
    if let Some(&bad) = eig.values.iter().find(|&&v| v <= tol_psd) {
        return Err(Error::NotPositiveDefinite { eigenvalue: bad });
    }
    let inv_sqrt: Vec<f64> = eig.values.iter().map(|v| 1.0 / v.sqrt()).collect();
    let d = ComplexMatrix::from_real_diag(&inv_sqrt);
    let x = eig.vectors.mul(&d).mul(&eig.vectors.adjoint());
    // Round away the anti-Hermitian noise from the triple product.
    Ok(ComplexMatrix::from_fn(x.rows(), x.cols(), |i, j| {
        0.5 * (x[(i, j)] + x[(j, i)].conj())
    }))
}

/// Cholesky factorization `g = l * l^*` with `l` lower triangular and a
/// positive real diagonal.
///
/// Pivots at or below `tol_rel * max_diag` raise
/// [`Error::NotPositiveDefinite`].
pub fn cholesky(g: &ComplexMatrix, tol_rel: f64) -> Result<ComplexMatrix> {
    assert_eq!(g.rows(), g.cols(), "Cholesky needs a square matrix");
    let n = g.rows();
    let max_diag = (0..n).map(|i| g[(i, i)].re).fold(0.0_f64, f64::max);
    let mut l = ComplexMatrix::zeros(n, n);
    for j in 0..n {
        let mut d = g[(j, j)].re;
        for k in 0..j {
            d -= l[(j, k)].norm_sqr();
        }
        if d <= tol_rel * max_diag {
            return Err(Error::NotPositiveDefinite { eigenvalue: d });
        }
        let djj = d.sqrt();
        l[(j, j)] = Complex64::new(djj, 0.0);
        for i in (j + 1)..n {
            let mut v = g[(i, j)];
            for k in 0..j {
                v -= l[(i, k)] * l[(j, k)].conj();
            }
            l[(i, j)] = v / djj;
        }
    }
    Ok(l)
}
