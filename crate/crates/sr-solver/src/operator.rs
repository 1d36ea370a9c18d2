//! Implicit application of the fine-grid dictionary R and its adjoint.

use crate::grid::FineGrid;
use crate::Result;
use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use sr_core::{fft::CenteredFft, shift::time_shift_with, Measurement, ProbingSignal};
use std::collections::BTreeMap;
use std::sync::Arc;

/// A complex linear map applied matrix-free.
pub trait LinearOperator {
    fn data_len(&self) -> usize;
    fn coeff_len(&self) -> usize;
    fn forward(&self, coeffs: &[Complex64]) -> Vec<Complex64>;
    fn adjoint(&self, data: &[Complex64]) -> Vec<Complex64>;
}

/// The SISO dictionary: column (m, n) is `F_{m/K} T_{n/K} x`.
///
/// Forward cost is O(n_count K log K): the nu axis collapses to one length-K
/// FFT per active tau shift, and the shifted probes `T_{n/K} x` are
/// precomputed once.
pub struct SisoDictionary {
    grid: FineGrid,
    l: usize,
    half: i64,
    /// n_count rows of length L: row n holds T_{n/K} x.
    shifted: Vec<Complex64>,
    fft_fwd: Arc<dyn Fft<f64>>,
    fft_inv: Arc<dyn Fft<f64>>,
}

impl SisoDictionary {
    pub fn new(x: &ProbingSignal, grid: &FineGrid) -> Result<Self> {
        if grid.l() != x.len() {
            return Err(crate::SolverError::DimensionMismatch {
                expected: grid.l(),
                actual: x.len(),
            });
        }
        let l = x.len();
        let k = grid.k();
        let cfft = CenteredFft::new(l);
        let n_count = grid.n_count();
        let mut shifted = Vec::with_capacity(n_count * l);
        for n in 0..n_count {
            shifted.extend(time_shift_with(&cfft, x.samples(), grid.tau_of(n)));
        }
        let mut planner = FftPlanner::new();
        Ok(Self {
            grid: grid.clone(),
            l,
            half: (l as i64 - 1) / 2,
            shifted,
            fft_fwd: planner.plan_fft_forward(k),
            fft_inv: planner.plan_fft_inverse(k),
        })
    }

    pub fn grid(&self) -> &FineGrid {
        &self.grid
    }

    /// Single dictionary column, for oracles and debiasing.
    pub fn column(&self, m: usize, n: usize) -> Vec<Complex64> {
        let t = &self.shifted[n * self.l..(n + 1) * self.l];
        let nu = self.grid.nu_of(m);
        sr_core::frequency_shift(t, nu)
    }
}

impl LinearOperator for SisoDictionary {
    fn data_len(&self) -> usize {
        self.l
    }

    fn coeff_len(&self) -> usize {
        self.grid.coeff_len()
    }

    fn forward(&self, coeffs: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(coeffs.len(), self.coeff_len());
        let k = self.grid.k();
        let m_count = self.grid.m_count();
        let mut y = vec![Complex64::default(); self.l];
        let mut buf = vec![Complex64::default(); k];
        for n in 0..self.grid.n_count() {
            buf.fill(Complex64::default());
            buf[..m_count].copy_from_slice(&coeffs[n * m_count..(n + 1) * m_count]);
            // buf[j] = sum_m b_{m,n} e^{+i 2 pi j m / K}; sampling at j = p mod K
            // gives the nu-axis synthesis at sample p.
            self.fft_inv.process(&mut buf);
            let t = &self.shifted[n * self.l..(n + 1) * self.l];
            for slot in 0..self.l {
                let p = slot as i64 - self.half;
                let j = p.rem_euclid(k as i64) as usize;
                y[slot] += t[slot] * buf[j];
            }
        }
        y
    }

    fn adjoint(&self, data: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(data.len(), self.l);
        let k = self.grid.k();
        let m_count = self.grid.m_count();
        let mut out = vec![Complex64::default(); self.coeff_len()];
        let mut buf = vec![Complex64::default(); k];
        for n in 0..self.grid.n_count() {
            buf.fill(Complex64::default());
            let t = &self.shifted[n * self.l..(n + 1) * self.l];
            for slot in 0..self.l {
                let p = slot as i64 - self.half;
                let j = p.rem_euclid(k as i64) as usize;
                buf[j] = t[slot].conj() * data[slot];
            }
            self.fft_fwd.process(&mut buf);
            out[n * m_count..(n + 1) * m_count].copy_from_slice(&buf[..m_count]);
        }
        out
    }
}

/// Apply R to a sparse coefficient map keyed by (m, n).
pub fn grid_forward(
    coeffs: &BTreeMap<(usize, usize), Complex64>,
    x: &ProbingSignal,
    grid: &FineGrid,
) -> Result<Measurement> {
    let dict = SisoDictionary::new(x, grid)?;
    let mut dense = vec![Complex64::default(); grid.coeff_len()];
    for (&(m, n), &v) in coeffs {
        dense[grid.flat(m, n)] = v;
    }
    Ok(Measurement {
        samples: dict.forward(&dense),
    })
}

/// Apply R^H to a measurement; output is dense over the active grid, n-major.
pub fn grid_adjoint(y: &Measurement, x: &ProbingSignal, grid: &FineGrid) -> Result<Vec<Complex64>> {
    let dict = SisoDictionary::new(x, grid)?;
    if y.len() != x.len() {
        return Err(crate::SolverError::DimensionMismatch {
            expected: x.len(),
            actual: y.len(),
        });
    }
    Ok(dict.adjoint(&y.samples))
}
