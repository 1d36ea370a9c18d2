//! Fine-grid sparse recovery of time-frequency shifts.
//!
//! The measurement is modeled as y = R b where the columns of R are
//! fractional time-frequency shifts of the probing signal on a grid with
//! spacing (1/K, 1/K), K >= L. R is only ever applied implicitly through
//! FFTs. Recovery solves
//!
//! ```text
//!   minimize ||b||_1  subject to  ||y - R b||_2^2 <= delta
//! ```
//!
//! by accelerated proximal gradient descent on the penalized form with a
//! continuation loop that drives the penalty to the residual target. The
//! equality-constrained program is the delta -> 0 limit of the same path.

pub mod extract;
pub mod fista;
pub mod grid;
pub mod metrics;
pub mod operator;
pub mod solution;

pub use extract::{extract_and_debias, ExtractConfig};
pub use fista::{power_iteration, solve_operator, SolverConfig, StepRule};
pub use grid::{FineGrid, GridRegion};
pub use metrics::{resolution_error, MatchReport};
pub use operator::{grid_adjoint, grid_forward, LinearOperator, SisoDictionary};
pub use solution::{Estimate, SolveResultFile, SolverStatus, SparseSolution};

use num_complex::Complex64;
use sr_core::{Measurement, ProbingSignal};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("grid: {0}")]
    Grid(String),
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("core: {0}")]
    Core(#[from] sr_core::CoreError),
    #[error("invalid config: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, SolverError>;

/// Solve the equality-flavored program L1(y): min ||b||_1 s.t. y = R b.
///
/// Realized as the error-constrained program with
/// delta = max(1e-20, (1e-8 ||y||_2)^2).
pub fn solve_l1(
    y: &Measurement,
    x: &ProbingSignal,
    grid: &FineGrid,
    config: &SolverConfig,
) -> Result<SparseSolution> {
    let ynorm = y.norm();
    let delta = (1e-8 * ynorm).powi(2).max(1e-20);
    let cfg = SolverConfig { delta, ..config.clone() };
    solve_l1_err(y, x, grid, &cfg)
}

/// Solve L1-ERR: min ||b||_1 s.t. ||y - R b||_2^2 <= config.delta.
pub fn solve_l1_err(
    y: &Measurement,
    x: &ProbingSignal,
    grid: &FineGrid,
    config: &SolverConfig,
) -> Result<SparseSolution> {
    if y.len() != x.len() {
        return Err(SolverError::DimensionMismatch {
            expected: x.len(),
            actual: y.len(),
        });
    }
    let dict = SisoDictionary::new(x, grid)?;
    let run = solve_operator(&dict, &y.samples, config);
    Ok(SparseSolution::from_run(run, grid))
}

pub(crate) fn norm2(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

pub(crate) fn l1_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm()).sum()
}
