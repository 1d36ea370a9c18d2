//! Fractional time and frequency shift operators and forward synthesis.

use crate::error::CoreError;
use crate::fft::CenteredFft;
use crate::probe::ProbingSignal;
use crate::scene::{Measurement, Scene};
use crate::Result;
use num_complex::Complex64;
use std::f64::consts::TAU;

/// Fractional time shift: FFT, per-bin phase `e^{-i 2 pi k tau}` with signed
/// bin index k, inverse FFT (which carries the 1/L factor).
///
/// On the natural grid `tau = n/L` this reduces to a circular shift by n.
pub fn fractional_time_shift(x: &ProbingSignal, tau: f64) -> Vec<Complex64> {
    let fft = CenteredFft::new(x.len());
    time_shift_with(&fft, x.samples(), tau)
}

/// Same operator over a raw centered buffer with a caller-provided plan.
pub fn time_shift_with(fft: &CenteredFft, x: &[Complex64], tau: f64) -> Vec<Complex64> {
    let n = fft.half() as i64;
    let mut spec = fft.forward_centered(x);
    for (slot, v) in spec.iter_mut().enumerate() {
        let k = slot as i64 - n;
        *v *= Complex64::from_polar(1.0, -TAU * k as f64 * tau);
    }
    fft.inverse_centered(&spec)
}

/// Frequency shift: entrywise `x_p e^{i 2 pi p nu}` with signed index p.
pub fn frequency_shift(x: &[Complex64], nu: f64) -> Vec<Complex64> {
    let n = (x.len() as i64 - 1) / 2;
    x.iter()
        .enumerate()
        .map(|(slot, v)| v * Complex64::from_polar(1.0, TAU * (slot as i64 - n) as f64 * nu))
        .collect()
}

/// Forward synthesis: `y_p = sum_j b_j [F_{nu_j} T_{tau_j} x]_p`.
pub fn synthesize(x: &ProbingSignal, scene: &Scene) -> Result<Measurement> {
    if scene.l != x.len() {
        return Err(CoreError::DimensionMismatch {
            expected: scene.l,
            actual: x.len(),
        });
    }
    let fft = CenteredFft::new(x.len());
    let mut y = vec![Complex64::default(); x.len()];
    for sc in &scene.scatterers {
        let shifted = time_shift_with(&fft, x.samples(), sc.tau);
        let modulated = frequency_shift(&shifted, sc.nu);
        for (acc, v) in y.iter_mut().zip(modulated) {
            *acc += sc.b * v;
        }
    }
    Ok(Measurement { samples: y })
}

/// Column (k, l) of the Gabor matrix: entry p is `x_{p-l} e^{i 2 pi k p / L}`,
/// with circular indexing of x. Requires k, l in -N..=N.
pub fn gabor_column(x: &ProbingSignal, k: i64, l: i64) -> Result<Vec<Complex64>> {
    let n = x.half() as i64;
    if k < -n || k > n || l < -n || l > n {
        return Err(CoreError::IndexOutOfRange { k, l, len: x.len() });
    }
    let len = x.len() as f64;
    Ok((0..x.len() as i64)
        .map(|slot| {
            let p = slot - n;
            x.at_wrapped(p - l) * Complex64::from_polar(1.0, TAU * (k * p) as f64 / len)
        })
        .collect())
}
