//! Pivoted modified Gram-Schmidt orthonormalization.

use crate::error::{Error, Result};
use crate::matrix::{inner, vec_norm};
use crate::{Complex64, ComplexMatrix};

/// Output of [`gram_schmidt`].
#[derive(Debug, Clone)]
pub struct GramSchmidtResult {
    /// Orthonormal vectors, one per row, spanning the input span. The row
    /// count equals the numerical rank.
    pub onb: ComplexMatrix,
    /// `m x rank` coefficient matrix with `input_row_i = sum_k coeffs[i][k] *
    /// onb_row_k`. Rows at pivot positions form a lower-triangular block with
    /// positive real diagonal.
    pub coeffs: ComplexMatrix,
    /// Indices of the input vectors that produced the basis, in acceptance
    /// order.
    pub pivot_order: Vec<usize>,
}

/// Orthonormalizes the rows of `vectors` by modified Gram-Schmidt with one
/// reorthogonalization pass.
///
/// Vectors are visited in input order (first-come pivoting); a vector whose
/// residual after projection has norm at most `tol_rank` times its own norm
/// is treated as dependent: it contributes no basis vector but is still
/// expressed in `coeffs`. Each accepted direction is normalized by its
/// residual norm, so the new (diagonal) coefficient is positive real and the
/// output is deterministic.
pub fn gram_schmidt(vectors: &ComplexMatrix, tol_rank: f64) -> Result<GramSchmidtResult> {
    let m = vectors.rows();

    if (0..m).all(|i| vec_norm(vectors.row(i)) <= tol_rank) {
        return Err(Error::AllZeroInput);
    }

    let mut basis: Vec<Vec<Complex64>> = Vec::new();
    let mut pivot_order = Vec::new();
    let mut coeff_rows: Vec<Vec<Complex64>> = Vec::with_capacity(m);

    for i in 0..m {
        let own_norm = vec_norm(vectors.row(i));
        let mut v = vectors.row(i).to_vec();
        let mut coeffs = vec![Complex64::ZERO; basis.len()];

        // Two MGS passes; the second repairs the orthogonality the first
        // loses on ill-conditioned inputs.
        for _pass in 0..2 {
            for (k, e) in basis.iter().enumerate() {
                let c = inner(&v, e);
                coeffs[k] += c;
                for (vj, ej) in v.iter_mut().zip(e) {
                    *vj -= c * ej;
                }
            }
        }

        let residual = vec_norm(&v);
        if residual > tol_rank * own_norm && residual > 0.0 {
            let inv = 1.0 / residual;
            for vj in v.iter_mut() {
                *vj *= inv;
            }
            basis.push(v);
            pivot_order.push(i);
            coeffs.push(Complex64::new(residual, 0.0));
        }
        coeff_rows.push(coeffs);
    }

    let rank = basis.len();
    let mut coeffs = ComplexMatrix::zeros(m, rank);
    for (i, row) in coeff_rows.iter().enumerate() {
        for (k, &c) in row.iter().enumerate() {
            coeffs[(i, k)] = c;
        }
    }

    Ok(GramSchmidtResult {
        onb: ComplexMatrix::from_rows(&basis).expect("rank >= 1 past the all-zero guard"),
        coeffs,
        pivot_order,
    })
}

impl GramSchmidtResult {
    /// Numerical rank of the input (row count of the basis).
    pub fn rank(&self) -> usize {
        self.onb.rows()
    }

    /// Inverse of the lower-triangular pivot block of `coeffs`, placed at the
    /// pivot columns of an otherwise zero `rank x m` matrix: row `k` expresses
    /// basis vector `k` as a combination of the original pivot vectors.
    pub fn basis_in_input_terms(&self, m: usize) -> ComplexMatrix {
        let r = self.rank();
        // Forward substitution on the pivot block.
        let mut inv = ComplexMatrix::identity(r);
        for col in 0..r {
            for row in 0..r {
                let mut sum = inv[(row, col)];
                let pivot_row = self.pivot_order[row];
                for k in 0..row {
                    sum -= self.coeffs[(pivot_row, k)] * inv[(k, col)];
                }
                inv[(row, col)] = sum / self.coeffs[(pivot_row, row)];
            }
        }
        let mut out = ComplexMatrix::zeros(r, m);
        for k in 0..r {
            for (j, &pivot) in self.pivot_order.iter().enumerate() {
                out[(k, pivot)] = inv[(k, j)];
            }
        }
        out
    }
}
