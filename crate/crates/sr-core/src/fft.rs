//! FFT helpers over the centered index range `p = -N..=N`.
//!
//! Vectors are stored with logical index `p` at slot `p + N`. The DFT pair
//! used everywhere is
//!
//! ```text
//!   X_k = sum_{l=-N}^{N} x_l e^{-i 2 pi l k / L}        (forward, unnormalized)
//!   x_p = (1/L) sum_{k=-N}^{N} X_k e^{+i 2 pi p k / L}  (inverse)
//! ```
//!
//! with the bin index `k` also running over `-N..=N`. Since exponents only
//! depend on indices mod `L`, both directions reduce to a standard FFT plus
//! an index rotation between centered and standard (0-based) layouts.

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::sync::Arc;

/// Planned forward/inverse FFTs of a fixed odd length, in centered layout.
pub struct CenteredFft {
    len: usize,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl CenteredFft {
    pub fn new(len: usize) -> Self {
        let mut planner = FftPlanner::new();
        Self {
            len,
            forward: planner.plan_fft_forward(len),
            inverse: planner.plan_fft_inverse(len),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Signed half-range N = (L-1)/2.
    pub fn half(&self) -> usize {
        (self.len - 1) / 2
    }

    /// Rotate centered storage (slot = p + N) into standard storage (slot = p mod L).
    pub fn to_standard(&self, centered: &[Complex64]) -> Vec<Complex64> {
        let l = self.len;
        let n = self.half();
        let mut out = vec![Complex64::default(); l];
        for (s, &v) in centered.iter().enumerate() {
            out[(s + n + 1) % l] = v;
        }
        out
    }

    /// Inverse of [`Self::to_standard`].
    pub fn from_standard(&self, standard: &[Complex64]) -> Vec<Complex64> {
        let l = self.len;
        let n = self.half();
        let mut out = vec![Complex64::default(); l];
        for (m, &v) in standard.iter().enumerate() {
            out[(m + n) % l] = v;
        }
        out
    }

    /// Forward DFT: centered signal in, centered spectrum out (bin k at slot k + N).
    pub fn forward_centered(&self, x: &[Complex64]) -> Vec<Complex64> {
        let mut buf = self.to_standard(x);
        self.forward.process(&mut buf);
        self.from_standard(&buf)
    }

    /// Inverse DFT with 1/L normalization, centered in and out.
    pub fn inverse_centered(&self, spectrum: &[Complex64]) -> Vec<Complex64> {
        let mut out = self.inverse_centered_unnormalized(spectrum);
        let scale = 1.0 / self.len as f64;
        for v in &mut out {
            *v *= scale;
        }
        out
    }

    /// `sum_k X_k e^{+i 2 pi p k / L}` without the 1/L factor.
    pub fn inverse_centered_unnormalized(&self, spectrum: &[Complex64]) -> Vec<Complex64> {
        let mut buf = self.to_standard(spectrum);
        self.inverse.process(&mut buf);
        self.from_standard(&buf)
    }
}
