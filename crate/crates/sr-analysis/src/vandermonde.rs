//! Condition number of clustered-frequency Vandermonde matrices.
//!
//! The L x 2S matrix with entries `e^{i 2 pi p q (1-eps) / L}` (columns
//! q = 0..2S-1) collects 2S complex sinusoids spaced `(1-eps)/L` apart. At
//! eps = 0 the columns are orthogonal DFT columns; as eps grows the columns
//! cluster and the condition number explodes, which is why recovery of
//! unseparated sources is unstable.

use crate::AnalysisError;
use nalgebra::DMatrix;
use num_complex::Complex64;
use std::f64::consts::TAU;

/// Condition number sigma_max / sigma_min of the clustered Vandermonde matrix.
pub fn vandermonde_condition(s: usize, eps: f64, l: usize) -> Result<f64, AnalysisError> {
    if 2 * s > l {
        return Err(AnalysisError::TooManyColumns { s, l });
    }
    if !(0.0..1.0).contains(&eps) {
        return Err(AnalysisError::InvalidEps(eps));
    }
    let m = DMatrix::from_fn(l, 2 * s, |p, q| {
        Complex64::from_polar(1.0, TAU * (p * q) as f64 * (1.0 - eps) / l as f64)
    });
    let sv = m.singular_values();
    let smax = sv.iter().cloned().fold(0.0f64, f64::max);
    let smin = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    Ok(smax / smin.max(f64::MIN_POSITIVE))
}

/// One sweep point of the inverse-condition-number study.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CondRow {
    pub s: usize,
    pub eps: f64,
    pub inv_kappa: f64,
}

/// Sweep 1/kappa over a list of sparsities and an eps grid.
pub fn vandermonde_sweep(
    l: usize,
    s_list: &[usize],
    eps_grid: &[f64],
) -> Result<Vec<CondRow>, AnalysisError> {
    let mut rows = Vec::with_capacity(s_list.len() * eps_grid.len());
    for &s in s_list {
        for &eps in eps_grid {
            let kappa = vandermonde_condition(s, eps, l)?;
            rows.push(CondRow {
                s,
                eps,
                inv_kappa: 1.0 / kappa,
            });
        }
    }
    Ok(rows)
}

/// Evenly spaced eps grid `[0, hi]` with `points` samples.
pub fn eps_grid(points: usize, hi: f64) -> Vec<f64> {
    if points == 1 {
        return vec![0.0];
    }
    (0..points)
        .map(|i| hi * i as f64 / (points - 1) as f64)
        .collect()
}
