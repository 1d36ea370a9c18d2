//! Separation predicates and conditioning diagnostics.
//!
//! Recovery guarantees hinge on the scatterer locations being separated on
//! the unit torus; this crate provides the wrap-around metric, the pairwise
//! separation checks for the single- and multi-antenna settings, and the
//! Vandermonde condition-number sweep that demonstrates why some separation
//! is necessary for stable recovery.

pub mod separation;
pub mod vandermonde;

pub use separation::{
    check_separation_mimo, check_separation_siso, wrap_distance, SeparationReport,
};
pub use vandermonde::{vandermonde_condition, vandermonde_sweep, CondRow};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("need 2S <= L, got S = {s}, L = {l}")]
    TooManyColumns { s: usize, l: usize },
    #[error("L must be odd and positive, got {0}")]
    InvalidLength(usize),
    #[error("eps must lie in [0, 1), got {0}")]
    InvalidEps(f64),
}
