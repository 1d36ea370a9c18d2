//! Dual-certificate construction and verification.
//!
//! Exact recovery of a separated scene is certified by a random trigonometric
//! polynomial Q(r) = <q, A f(r)> that interpolates the coefficient signs at
//! the scene nodes and stays strictly below one in modulus everywhere else.
//! This crate builds Q by interpolating with randomized squared-Fejer
//! kernels, verifies the interpolation and boundedness conditions on dense
//! grids, produces the discrete (fine-grid) certificate vector in the row
//! space of the dictionary, and checks the isotropy identity E[G^H G] = I
//! that underpins the construction.

pub mod certificate;
pub mod discrete;
pub mod fejer;
pub mod gvector;
pub mod isotropy;

pub use certificate::{
    build_certificate, build_certificate_with, verify_certificate, AtomOperator,
    CertificateReport, DualCertificate, IdentityAtomOperator,
};
pub use discrete::{discrete_certificate, DiscreteCertificate};
pub use fejer::{fejer_coefficients, FejerKernel};
pub use gvector::g_vector;
pub use isotropy::{isotropy_check, IsotropyStats};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error("node and sign counts differ: {nodes} vs {signs}")]
    NodeCountMismatch { nodes: usize, signs: usize },
    #[error("interpolation system is numerically singular (cond ~ {cond:.3e})")]
    SingularSystem { cond: f64 },
    #[error("kernel degree {kernel} does not match signal half-length {half}")]
    KernelMismatch { kernel: usize, half: usize },
    #[error("node ({tau}, {nu}) does not lie on the K = {k} grid")]
    NodeOffGrid { tau: f64, nu: f64, k: usize },
    #[error("unsupported derivative order ({0}, {1}); only 0 and 1 are available")]
    DerivativeOrder(usize, usize),
    #[error("solver: {0}")]
    Solver(#[from] sr_solver::SolverError),
    #[error("core: {0}")]
    Core(#[from] sr_core::CoreError),
}

pub type Result<T> = std::result::Result<T, CertifyError>;
