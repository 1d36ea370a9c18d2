//! Signal model for super-resolution delay-Doppler estimation.
//!
//! A length-`L` probing signal (`L` odd) is indexed by the signed range
//! `p = -N..=N` with `N = (L-1)/2`. Point scatterers act on it through
//! fractional time and frequency shift operators, both 1-periodic in their
//! shift parameter, and the received measurement is the superposition of the
//! shifted copies. All operators here are exact discrete definitions, not
//! continuous-time approximations.

pub mod atom;
pub mod error;
pub mod fft;
pub mod probe;
pub mod scene;
pub mod shift;

pub use atom::{atom, GaborSystem};
pub use error::CoreError;
pub use fft::CenteredFft;
pub use probe::{random_probing, ProbeKind, ProbingSignal};
pub use scene::{Measurement, Scatterer, Scene, SceneFile};
pub use shift::{fractional_time_shift, frequency_shift, gabor_column, synthesize};

pub type Complex = num_complex::Complex64;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, CoreError>;
