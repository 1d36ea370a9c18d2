//! Sparse solutions and the solver result file format.

use crate::fista::SolverRun;
use crate::grid::FineGrid;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolverStatus {
    Converged,
    MaxIters,
    InfeasibleDelta,
}

/// A continuous location estimate extracted from a grid solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub b: Complex64,
    pub tau: f64,
    pub nu: f64,
    /// Set when the debias least-squares was rank deficient at this cluster.
    pub degenerate: bool,
}

/// Solution of the fine-grid program plus extracted estimates.
#[derive(Debug, Clone)]
pub struct SparseSolution {
    /// Nonzero grid coefficients keyed by (m, n) = (nu index, tau index).
    pub coeffs: BTreeMap<(usize, usize), Complex64>,
    pub estimates: Vec<Estimate>,
    pub residual_norm: f64,
    pub status: SolverStatus,
    pub iters: usize,
}

impl SparseSolution {
    pub fn from_run(run: SolverRun, grid: &FineGrid) -> Self {
        let mut coeffs = BTreeMap::new();
        for (idx, &v) in run.coeffs.iter().enumerate() {
            if v.norm() > 0.0 {
                coeffs.insert(grid.unflat(idx), v);
            }
        }
        let status = if run.converged {
            SolverStatus::Converged
        } else if run.infeasible {
            SolverStatus::InfeasibleDelta
        } else {
            SolverStatus::MaxIters
        };
        Self {
            coeffs,
            estimates: Vec::new(),
            residual_norm: run.residual_norm,
            status,
            iters: run.iters,
        }
    }

    pub fn is_converged(&self) -> bool {
        self.status == SolverStatus::Converged
    }

    /// Dense coefficient vector in the grid's flat layout.
    pub fn dense(&self, grid: &FineGrid) -> Vec<Complex64> {
        let mut out = vec![Complex64::default(); grid.coeff_len()];
        for (&(m, n), &v) in &self.coeffs {
            out[grid.flat(m, n)] = v;
        }
        out
    }

    pub fn l1_norm(&self) -> f64 {
        self.coeffs.values().map(|v| v.norm()).sum()
    }
}

/// JSON-facing record of one estimate.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EstimateRecord {
    pub b_re: f64,
    pub b_im: f64,
    pub tau: f64,
    pub nu: f64,
}

/// Solver result file:
/// `{ "status", "iters", "residual", "estimates": [...], "resolution_error" }`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolveResultFile {
    pub status: SolverStatus,
    pub iters: usize,
    pub residual: f64,
    pub estimates: Vec<EstimateRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resolution_error: Option<f64>,
}

impl SolveResultFile {
    pub fn from_solution(sol: &SparseSolution, resolution_error: Option<f64>) -> Self {
        Self {
            status: sol.status,
            iters: sol.iters,
            residual: sol.residual_norm,
            estimates: sol
                .estimates
                .iter()
                .map(|e| EstimateRecord {
                    b_re: e.b.re,
                    b_im: e.b.im,
                    tau: e.tau,
                    nu: e.nu,
                })
                .collect(),
            resolution_error,
        }
    }
}
