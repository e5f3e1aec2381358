//! Numerical toolkit for finite frames.
//!
//! The central operation converts an arbitrary spanning set of vectors into
//! the Parseval frame closest to it in the least-squares sense, via the polar
//! decomposition of its synthesis operator. Around that sit:
//!
//! * [`matrix`] / [`linalg`] — a dense complex matrix type with the kernels
//!   the conversion needs: pivoted modified Gram-Schmidt, one-sided Jacobi
//!   SVD, polar decomposition, and a Hermitian Jacobi eigensolver.
//! * [`frame`] — frame vectors, frame operators and bounds, the Parseval
//!   conversion itself, canonical tight frames, and per-subspace conversions.
//! * [`spiral`] — Archimedean spiral geometry, arc-length based sample point
//!   selection under the covering condition, and Fourier frames built either
//!   from exact sinc Gram matrices on an interval or from exponentials
//!   sampled on a polar disk grid.
//! * [`recon`] — signal reconstruction from frame coefficients, truncated
//!   reconstruction, and closed-form truncation/decay error bounds.
//! * [`quad`] — Gauss-Legendre and adaptive Simpson quadrature used by the
//!   arc-length and empirical-verification paths.
//!
//! All operations are pure functions over immutable values; everything is
//! `Send + Sync` and no global state is involved.

pub mod error;
pub mod frame;
pub mod linalg;
pub mod matrix;
pub mod quad;
pub mod recon;
pub mod spiral;
pub mod tol;

pub use error::{Error, Result};
pub use matrix::ComplexMatrix;

/// Complex scalar used throughout the crate.
pub type Complex64 = num_complex::Complex<f64>;
