//! Polar decomposition and partial-isometry verification.

use super::svd::svd;
use crate::error::Result;
use crate::ComplexMatrix;

/// Polar decomposition `t = w * p`.
#[derive(Debug, Clone)]
pub struct PolarDecomposition {
    /// Partial isometry with the same shape as the input. For full
    /// row-rank input, `w * w^* = I`.
    pub w: ComplexMatrix,
    /// Hermitian positive semidefinite factor `(t^* t)^{1/2}`, square of
    /// order `cols(t)`.
    pub p: ComplexMatrix,
}

/// Computes the polar decomposition through the compact SVD: for
/// `t = u * diag(sigma) * v^*`, the factors are `w = u * v^*` and
/// `p = v * diag(sigma) * v^*`.
///
/// For rank-deficient input `w` is the partial isometry supported on the
/// range of `p`; this is the unique choice determined by the compact SVD.
pub fn polar_decompose(t: &ComplexMatrix) -> Result<PolarDecomposition> {
    let s = svd(t)?;
    let w = s.u.mul(&s.v.adjoint());
    let sig = ComplexMatrix::from_real_diag(&s.sigma);
    let p = s.v.mul(&sig).mul(&s.v.adjoint());
    Ok(PolarDecomposition { w, p })
}

/// Outcome of [`is_partial_isometry`].
#[derive(Debug, Clone, Copy)]
pub struct IsometryCheck {
    /// Whether `||w w^* w - w||_F <= tol * ||w||_F`.
    pub is_partial_isometry: bool,
    /// `||w w^* w - w||_F`.
    pub defect: f64,
    /// `||w w^* - I||_F`, the co-isometry defect used by the frame checks.
    pub coisometry_defect: f64,
}

/// Tests the defining identity `w w^* w = w` of a partial isometry and
/// reports both defects.
pub fn is_partial_isometry(w: &ComplexMatrix, tol: f64) -> IsometryCheck {
    let wwstar = w.mul(&w.adjoint());
    let defect = wwstar.mul(w).frobenius_distance(w);
    IsometryCheck {
        is_partial_isometry: defect <= tol * w.frobenius_norm(),
        defect,
        coisometry_defect: wwstar.identity_defect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_decomposes_trivially() {
        let t = ComplexMatrix::identity(3);
        let pd = polar_decompose(&t).unwrap();
        assert!(pd.w.identity_defect() < 1e-14);
        assert!(pd.p.identity_defect() < 1e-14);
    }

    #[test]
    fn positive_diagonal_keeps_w_identity() {
        let t = ComplexMatrix::from_real_diag(&[2.0, 3.0]);
        let pd = polar_decompose(&t).unwrap();
        assert!(pd.w.identity_defect() < 1e-14);
        assert!((pd.p[(0, 0)] - c(2.0, 0.0)).norm() < 1e-14);
        assert!((pd.p[(1, 1)] - c(3.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn factors_reproduce_input_and_p_is_psd_hermitian() {
        let t = ComplexMatrix::from_rows(&[
            vec![c(1.0, 1.0), c(0.0, 2.0), c(3.0, -1.0)],
            vec![c(2.0, 0.0), c(1.0, -1.0), c(0.0, 0.5)],
        ])
        .unwrap();
        let pd = polar_decompose(&t).unwrap();
        let back = pd.w.mul(&pd.p);
        assert!(back.frobenius_distance(&t) < 1e-13 * t.frobenius_norm());
        assert!(pd.p.hermitian_defect() < 1e-13);
        // Full row rank: w w^* = I.
        let check = is_partial_isometry(&pd.w, 1e-12);
        assert!(check.is_partial_isometry);
        assert!(check.coisometry_defect < 1e-12);
    }

    #[test]
    fn isometric_embedding_is_partial_isometry() {
        // Embedding of C^2 into C^3.
        let w = ComplexMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let check = is_partial_isometry(&w, 1e-12);
        assert!(check.is_partial_isometry);
        assert!(check.defect < 1e-14);
        // w w^* is a projection, not the identity, on C^3.
        assert!(check.coisometry_defect > 0.5);
    }

    #[test]
    fn scaling_is_not_an_isometry() {
        let w = ComplexMatrix::from_rows(&[vec![c(2.0, 0.0)]]).unwrap();
        let check = is_partial_isometry(&w, 1e-10);
        assert!(!check.is_partial_isometry);
        assert!((check.defect - 6.0).abs() < 1e-14);
    }
}
