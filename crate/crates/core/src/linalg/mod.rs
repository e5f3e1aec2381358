//! Dense complex linear algebra kernels.
//!
//! Everything here works on [`ComplexMatrix`](crate::ComplexMatrix) values and is sized for the
//! dense, small-to-medium problems frame construction produces (up to a few
//! thousand rows, a few hundred columns). No attempt is made at sparse or
//! large-scale performance.

mod eig;
mod gram_schmidt;
mod polar;
mod svd;

pub use eig::{cholesky, herm_eig, herm_inv_sqrt, HermitianEig};
pub use gram_schmidt::{gram_schmidt, GramSchmidtResult};
pub use polar::{is_partial_isometry, polar_decompose, IsometryCheck, PolarDecomposition};
pub use svd::{svd, Svd};

/// Jacobi rotation diagonalizing the 2x2 Hermitian block
/// `[[app, apq], [conj(apq), aqq]]`.
///
/// Returns `(c, s, phase)` with `c, s` real, `c^2 + s^2 = 1`, such that the
/// unitary `[[c, s*phase], [-s*conj(phase), c]]` annihilates the off-diagonal
/// entry.
pub(crate) fn jacobi_rotation(app: f64, aqq: f64, apq: crate::Complex64) -> (f64, f64, crate::Complex64) {
    let mag = apq.norm();
    let phase = apq / mag;
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau == 0.0 {
        1.0
    } else {
        tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    (c, c * t, phase)
}
