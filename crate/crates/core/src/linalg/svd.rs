//! One-sided Jacobi singular value decomposition.

use super::jacobi_rotation;
use crate::error::{Error, Result};
use crate::matrix::vec_norm;
use crate::{tol, Complex64, ComplexMatrix};

/// Compact singular value decomposition `a = u * diag(sigma) * v^*`.
///
/// `u` is `rows(a) x r` and `v` is `cols(a) x r` with orthonormal columns,
/// where `r` is the numerical rank: singular values below
/// [`tol::RANK`]` * sigma_max` are dropped. `sigma` is sorted descending.
/// A numerically zero input keeps a single zero singular value so the
/// factor shapes stay well-formed.
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: ComplexMatrix,
    pub sigma: Vec<f64>,
    pub v: ComplexMatrix,
}

/// Computes the compact SVD by one-sided Jacobi rotations.
///
/// The iteration runs on the taller orientation (the input is implicitly
/// conjugate-transposed when it has more columns than rows) and orthogonalizes
/// column pairs until every rotation falls below a relative threshold of
/// [`tol::JACOBI_EPS`], within a budget of [`tol::JACOBI_SWEEPS`] sweeps.
pub fn svd(a: &ComplexMatrix) -> Result<Svd> {
    if a.rows() < a.cols() {
        // svd(a^H) = (v, sigma, u) gives svd(a) by swapping the factors.
        let t = svd(&a.adjoint())?;
        return Ok(Svd {
            u: t.v,
            sigma: t.sigma,
            v: t.u,
        });
    }

    let m = a.rows();
    let n = a.cols();
    // Work on columns: cols[j] is the j-th column of the evolving matrix.
    let mut cols: Vec<Vec<Complex64>> = (0..n).map(|j| a.col(j)).collect();
    let mut v: Vec<Vec<Complex64>> = (0..n)
        .map(|j| {
            let mut e = vec![Complex64::ZERO; n];
            e[j] = Complex64::ONE;
            e
        })
        .collect();

    // Columns whose norm falls below the rank threshold are numerically zero;
    // rotating against them stalls the relative convergence test, so they are
    // frozen and later dropped by the compact-rank cut.
    let zero_floor = {
        let f = tol::RANK * a.frobenius_norm();
        f * f
    };

    let mut converged = false;
    for _sweep in 0..tol::JACOBI_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let (app, aqq, apq) = column_gram(&cols[p], &cols[q]);
                if app <= zero_floor || aqq <= zero_floor {
                    continue;
                }
                if apq.norm_sqr() <= tol::JACOBI_EPS * tol::JACOBI_EPS * app * aqq {
                    continue;
                }
                rotated = true;
                let (c, s, phase) = jacobi_rotation(app, aqq, apq);
                rotate_pair(&mut cols, p, q, c, s, phase);
                rotate_pair(&mut v, p, q, c, s, phase);
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

    // Column norms are the singular values; sort descending.
    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<f64> = cols.iter().map(|c| vec_norm(c)).collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap());

    let sigma_max = norms[order[0]];
    let rank = if sigma_max == 0.0 {
        1
    } else {
        order
            .iter()
            .take_while(|&&j| norms[j] > tol::RANK * sigma_max)
            .count()
            .max(1)
    };

    let mut u = ComplexMatrix::zeros(m, rank);
    let mut vk = ComplexMatrix::zeros(n, rank);
    let mut sigma = Vec::with_capacity(rank);
    for (k, &j) in order.iter().take(rank).enumerate() {
        let s = norms[j];
        sigma.push(s);
        if s > 0.0 {
            for i in 0..m {
                u[(i, k)] = cols[j][i] / s;
            }
        } else {
            // Zero matrix: keep a canonical unit column.
            u[(k.min(m - 1), k)] = Complex64::ONE;
        }
        for i in 0..n {
            vk[(i, k)] = v[j][i];
        }
    }

    Ok(Svd {
        u,
        sigma,
        v: vk,
    })
}

fn column_gram(p: &[Complex64], q: &[Complex64]) -> (f64, f64, Complex64) {
    let mut app = 0.0;
    let mut aqq = 0.0;
    let mut apq = Complex64::ZERO;
    for (x, y) in p.iter().zip(q) {
        app += x.norm_sqr();
        aqq += y.norm_sqr();
        apq += x.conj() * y;
    }
    (app, aqq, apq)
}

/// Applies the 2x2 unitary `[[c, s*phase], [-s*conj(phase), c]]` to columns
/// `p` and `q` from the right.
fn rotate_pair(cols: &mut [Vec<Complex64>], p: usize, q: usize, c: f64, s: f64, phase: Complex64) {
    let (head, tail) = cols.split_at_mut(q);
    let cp = &mut head[p];
    let cq = &mut tail[0];
    for (x, y) in cp.iter_mut().zip(cq.iter_mut()) {
        let new_x = c * *x - s * phase.conj() * *y;
        let new_y = s * phase * *x + c * *y;
        *x = new_x;
        *y = new_y;
    }
}

impl Svd {
    /// Reassembles `u * diag(sigma) * v^*`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let sig = ComplexMatrix::from_real_diag(&self.sigma);
        self.u.mul(&sig).mul(&self.v.adjoint())
    }

    /// Numerical rank retained in the compact factors.
    pub fn rank(&self) -> usize {
        self.sigma.len()
    }
}
