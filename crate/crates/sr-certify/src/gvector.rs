//! Interpolation basis vectors in the atom domain.

use crate::fejer::FejerKernel;
use crate::{CertifyError, Result};
use num_complex::Complex64;
use std::f64::consts::TAU;

/// The vector g_n(r) with entries
/// `g_a g_b (i 2 pi a)^{n1} (i 2 pi b)^{n2} e^{-i 2 pi (tau a + nu b)}`
/// over the double index (a, b) in {-N..N}^2, flattened a-major to match
/// the atom layout of `sr_core::atom`.
///
/// Pairing with an atom reproduces the separable kernel and its partials:
/// `<g_n(r_j), f(r)> = F^(n1)(tau - tau_j) F^(n2)(nu - nu_j)`.
pub fn g_vector(
    r: (f64, f64),
    n: (usize, usize),
    kernel: &FejerKernel,
) -> Result<Vec<Complex64>> {
    let (n1, n2) = n;
    if n1 > 1 || n2 > 1 {
        return Err(CertifyError::DerivativeOrder(n1, n2));
    }
    let half = kernel.half() as i64;
    let l = 2 * half + 1;
    let (tau, nu) = r;
    let mut out = Vec::with_capacity((l * l) as usize);
    for a in -half..=half {
        let ga = kernel.coefficient(a);
        let da = if n1 == 1 {
            Complex64::new(0.0, TAU * a as f64)
        } else {
            Complex64::new(1.0, 0.0)
        };
        for b in -half..=half {
            let gb = kernel.coefficient(b);
            let db = if n2 == 1 {
                Complex64::new(0.0, TAU * b as f64)
            } else {
                Complex64::new(1.0, 0.0)
            };
            let phase = Complex64::from_polar(1.0, -TAU * (a as f64 * tau + b as f64 * nu));
            out.push(ga * gb * da * db * phase);
        }
    }
    Ok(out)
}
