//! Default numerical tolerances.
//!
//! All tolerances are relative Frobenius-norm tolerances unless a function
//! documents otherwise. Callers that need different thresholds pass them
//! explicitly; these constants are the documented defaults.

/// Default relative tolerance for orthonormality, polar-factor, and
/// frame-operator checks.
pub const DEFAULT: f64 = 1e-10;

/// Relative numerical-rank threshold: singular values below `RANK * sigma_max`
/// are treated as zero.
pub const RANK: f64 = 1e-12;

/// Relative off-diagonal threshold at which Jacobi rotations stop.
pub const JACOBI_EPS: f64 = 1e-14;

/// Sweep budget for the Jacobi SVD and eigenvalue iterations.
pub const JACOBI_SWEEPS: usize = 60;

/// Largest frame-operator condition number the dual-frame reconstruction
/// path will invert.
pub const MAX_DUAL_CONDITION: f64 = 1e12;
