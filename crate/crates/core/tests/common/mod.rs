#![allow(dead_code)]

//! Shared generators and assertions for the integration suites.

use framecast_core::frame::Frame;
use framecast_core::linalg::gram_schmidt;
use framecast_core::matrix::inner;
use framecast_core::{Complex64, ComplexMatrix};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| random_complex(rng))
}

/// Random unitary of order n: the Gram-Schmidt basis of a random Gaussian-ish
/// square matrix (full rank with probability one).
pub fn random_unitary(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    loop {
        let m = random_matrix(rng, n, n);
        if let Ok(gs) = gram_schmidt(&m, 1e-8) {
            if gs.rank() == n {
                return gs.onb;
            }
        }
    }
}

/// Random spanning frame of m vectors in dimension n whose frame-operator
/// condition number (upper/lower bound ratio) is at most `max_condition`.
///
/// Built as `T = U diag(sigma) V`, with unitary factors and singular values
/// log-spaced so that `(sigma_max / sigma_min)^2 <= max_condition`; the
/// frame vectors are the columns of `T`.
pub fn random_frame(rng: &mut ChaCha8Rng, n: usize, m: usize, max_condition: f64) -> Frame {
    assert!(m >= n);
    let u = random_unitary(rng, n);
    let v = random_unitary(rng, m);
    // Nominal ratio leaves headroom for the 0.9..1.0 jitter below.
    let sigma_ratio = (max_condition / 2.0).sqrt();
    let mut diag = vec![Complex64::ZERO; n];
    for (i, d) in diag.iter_mut().enumerate() {
        let t = if n == 1 {
            0.0
        } else {
            i as f64 / (n - 1) as f64
        };
        let s = sigma_ratio.powf(-t) * rng.random_range(0.9..1.0);
        *d = Complex64::new(s, 0.0);
    }
    // T = U * diag * (first n rows of V): n x m synthesis matrix.
    let mut t = ComplexMatrix::zeros(n, m);
    for i in 0..n {
        for j in 0..m {
            let mut acc = Complex64::ZERO;
            for k in 0..n {
                acc += u[(i, k)] * diag[k] * v[(k, j)];
            }
            t[(i, j)] = acc;
        }
    }
    // Frame vectors are the columns of the synthesis matrix.
    Frame::from_matrix(t.transpose())
}

/// Random vector in the span of the frame.
pub fn random_in_span(rng: &mut ChaCha8Rng, frame: &Frame) -> Vec<Complex64> {
    let mut out = vec![Complex64::ZERO; frame.dim()];
    for i in 0..frame.len() {
        let c = random_complex(rng);
        for (o, v) in out.iter_mut().zip(frame.vector(i)) {
            *o += c * v;
        }
    }
    out
}

/// Measurement coefficients `<target, f_j>` of a coordinate vector against
/// every frame vector.
pub fn measurements(frame: &Frame, target: &[Complex64]) -> Vec<Complex64> {
    (0..frame.len())
        .map(|j| inner(target, frame.vector(j)))
        .collect()
}

pub fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt()
}
