//! Continuous atoms f(r) and the measurement operator A.
//!
//! A length-L^2 coefficient vector z over the double index (a, b), with both
//! axes running -N..=N, maps to L samples through A z = G_x F^{-1} z: a 2D
//! centered inverse DFT followed by Gabor synthesis with window x. Columns of
//! A at the atoms f(r), r = (tau, nu), reproduce the fractional shifts:
//! A f(r) = F_nu T_tau x. Neither the L x L^2 Gabor matrix nor the DFT matrix
//! is ever materialized.

use crate::fft::CenteredFft;
use crate::probe::ProbingSignal;
use num_complex::Complex64;
use std::f64::consts::TAU;

/// The atom f(r): entries `e^{-i 2 pi (a tau + b nu)}` over (a, b) in
/// {-N..N}^2, flattened a-major (slot (a+N)*L + (b+N)).
pub fn atom(r: (f64, f64), l: usize) -> Vec<Complex64> {
    let n = (l as i64 - 1) / 2;
    let (tau, nu) = r;
    let mut out = Vec::with_capacity(l * l);
    for a in -n..=n {
        for b in -n..=n {
            out.push(Complex64::from_polar(
                1.0,
                -TAU * (a as f64 * tau + b as f64 * nu),
            ));
        }
    }
    out
}

/// Fast application of A = G_x F^{-1} and its adjoint.
pub struct GaborSystem {
    x: ProbingSignal,
    fft: CenteredFft,
}

impl GaborSystem {
    pub fn new(x: ProbingSignal) -> Self {
        let fft = CenteredFft::new(x.len());
        Self { x, fft }
    }

    pub fn probe(&self) -> &ProbingSignal {
        &self.x
    }

    pub fn signal_len(&self) -> usize {
        self.x.len()
    }

    pub fn coeff_len(&self) -> usize {
        self.x.len() * self.x.len()
    }

    /// y = A z; z is an L^2 vector over (a, b), a-major.
    pub fn apply(&self, z: &[Complex64]) -> Vec<Complex64> {
        let l = self.x.len();
        assert_eq!(z.len(), l * l, "coefficient length");
        let n = l as i64 / 2;

        // (1/L^2) sum_{a,b} z(a,b) e^{i 2 pi (b k + a ell) / L}, laid out [ell][k].
        let m1 = self.map_axis1(z, |row| self.fft.inverse_centered(row));
        let w = self.map_axis0(&m1, |col| self.fft.inverse_centered(col));

        // y_p = sum_ell x_{p-ell} sum_k w(ell, k) e^{i 2 pi k p / L}
        let mut y = vec![Complex64::default(); l];
        for ell_slot in 0..l {
            let row = &w[ell_slot * l..(ell_slot + 1) * l];
            let v = self.fft.inverse_centered_unnormalized(row);
            let ell = ell_slot as i64 - n;
            for (p_slot, vv) in v.iter().enumerate() {
                let p = p_slot as i64 - n;
                y[p_slot] += self.x.at_wrapped(p - ell) * vv;
            }
        }
        y
    }

    /// z' = A^H y.
    pub fn adjoint(&self, y: &[Complex64]) -> Vec<Complex64> {
        let l = self.x.len();
        assert_eq!(y.len(), l, "data length");
        let n = l as i64 / 2;

        // u(k, ell) = sum_p conj(x_{p-ell}) y_p e^{-i 2 pi k p / L}, laid out [ell][k].
        let mut u = vec![Complex64::default(); l * l];
        let mut buf = vec![Complex64::default(); l];
        for ell_slot in 0..l {
            let ell = ell_slot as i64 - n;
            for (p_slot, b) in buf.iter_mut().enumerate() {
                let p = p_slot as i64 - n;
                *b = self.x.at_wrapped(p - ell).conj() * y[p_slot];
            }
            let spec = self.fft.forward_centered(&buf);
            u[ell_slot * l..(ell_slot + 1) * l].copy_from_slice(&spec);
        }

        // z'(a, b) = (1/L^2) sum_{k,ell} u(k,ell) e^{-i 2 pi (b k + a ell) / L}
        let p1 = self.map_axis1(&u, |row| self.fft.forward_centered(row));
        let mut z = self.map_axis0(&p1, |col| self.fft.forward_centered(col));
        let scale = 1.0 / (l * l) as f64;
        for v in &mut z {
            *v *= scale;
        }
        z
    }

    fn map_axis1(
        &self,
        grid: &[Complex64],
        f: impl Fn(&[Complex64]) -> Vec<Complex64>,
    ) -> Vec<Complex64> {
        let l = self.x.len();
        let mut out = vec![Complex64::default(); l * l];
        for i in 0..l {
            let t = f(&grid[i * l..(i + 1) * l]);
            out[i * l..(i + 1) * l].copy_from_slice(&t);
        }
        out
    }

    fn map_axis0(
        &self,
        grid: &[Complex64],
        f: impl Fn(&[Complex64]) -> Vec<Complex64>,
    ) -> Vec<Complex64> {
        let l = self.x.len();
        let mut out = vec![Complex64::default(); l * l];
        let mut col = vec![Complex64::default(); l];
        for j in 0..l {
            for i in 0..l {
                col[i] = grid[i * l + j];
            }
            let t = f(&col);
            for i in 0..l {
                out[i * l + j] = t[i];
            }
        }
        out
    }
}
