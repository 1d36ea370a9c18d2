//! Squared Fejer kernel coefficients.

use num_complex::Complex64;
use std::f64::consts::TAU;

/// Degree-N trigonometric polynomial F(t) = sum_j g_j e^{i 2 pi t j} obtained
/// by squaring a Fejer kernel, normalized so F(0) = 1.
///
/// Squaring happens in the time domain, so the coefficients are the
/// self-convolution of the triangular Fejer sequence of order m = floor(N/2)+1,
/// zero-padded to degree N. F is real, even, nonnegative, and decays fast
/// away from t = 0, which is what interpolation-based certificates need.
#[derive(Debug, Clone, PartialEq)]
pub struct FejerKernel {
    n: usize,
    /// Coefficients g_j at slot j + N, j = -N..=N; symmetric.
    g: Vec<f64>,
}

/// Build the squared-Fejer coefficients for half-length N >= 1.
pub fn fejer_coefficients(n: usize) -> FejerKernel {
    assert!(n >= 1, "kernel needs degree at least 1");
    let m = n / 2 + 1;
    // Triangular sequence 1 - |j|/m, support |j| <= m-1.
    let tri: Vec<f64> = (-(m as i64 - 1)..=(m as i64 - 1))
        .map(|j| 1.0 - j.abs() as f64 / m as f64)
        .collect();
    // Self-convolution, support |j| <= 2m-2 <= N.
    let conv_half = 2 * (m - 1);
    let mut g = vec![0.0; 2 * n + 1];
    for (i, &a) in tri.iter().enumerate() {
        for (j, &b) in tri.iter().enumerate() {
            let idx = (i + j) as i64 - 2 * (m as i64 - 1); // in -conv_half..=conv_half
            debug_assert!(idx.unsigned_abs() as usize <= conv_half);
            g[(idx + n as i64) as usize] += a * b;
        }
    }
    let total: f64 = g.iter().sum();
    for v in &mut g {
        *v /= total;
    }
    FejerKernel { n, g }
}

impl FejerKernel {
    /// Half-length N (the polynomial degree).
    pub fn half(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.g
    }

    pub fn coefficient(&self, j: i64) -> f64 {
        if j.unsigned_abs() as usize > self.n {
            0.0
        } else {
            self.g[(j + self.n as i64) as usize]
        }
    }

    /// F(t), real by symmetry of the coefficients.
    pub fn value(&self, t: f64) -> f64 {
        self.deriv(t, 0)
    }

    /// d^order/dt^order F(t) for order 0, 1, 2.
    pub fn deriv(&self, t: f64, order: usize) -> f64 {
        let n = self.n as i64;
        let mut acc = 0.0;
        for j in -n..=n {
            let g = self.g[(j + n) as usize];
            let w = TAU * j as f64;
            let phase = w * t;
            acc += match order {
                0 => g * phase.cos(),
                1 => -g * w * phase.sin(),
                2 => -g * w * w * phase.cos(),
                _ => panic!("derivative order {order} not supported"),
            };
        }
        acc
    }

    /// F as a complex polynomial value (imaginary part is zero up to rounding).
    pub fn value_complex(&self, t: f64) -> Complex64 {
        Complex64::new(self.value(t), 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalized_and_symmetric() {
        for n in [1usize, 2, 7, 15, 31] {
            let k = fejer_coefficients(n);
            let sum: f64 = k.coefficients().iter().sum();
            assert!((sum - 1.0).abs() < 1e-12);
            assert!((k.value(0.0) - 1.0).abs() < 1e-12);
            for j in 0..=n as i64 {
                assert_eq!(k.coefficient(j), k.coefficient(-j));
            }
        }
    }

    #[test]
    fn matches_direct_polynomial_multiplication() {
        // Brute-force oracle: multiply the triangular polynomial by itself.
        let n = 2usize;
        let m = n / 2 + 1; // 2
        let tri = [1.0 - 1.0 / m as f64, 1.0, 1.0 - 1.0 / m as f64]; // j=-1,0,1
        let mut conv = vec![0.0; 5];
        for i in 0..3 {
            for j in 0..3 {
                conv[i + j] += tri[i] * tri[j];
            }
        }
        let total: f64 = conv.iter().sum();
        let k = fejer_coefficients(n);
        for (j, &c) in conv.iter().enumerate() {
            let got = k.coefficient(j as i64 - 2);
            assert!((got - c / total).abs() < 1e-14, "j={j}: {got} vs {}", c / total);
        }
    }

    #[test]
    fn nonnegative_on_dense_grid() {
        let k = fejer_coefficients(15);
        for i in 0..2048 {
            let t = i as f64 / 2048.0;
            assert!(k.value(t) >= -1e-12, "F({t}) = {}", k.value(t));
        }
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let k = fejer_coefficients(9);
        let h = 1e-6;
        for &t in &[0.1, 0.37, 0.81] {
            let fd1 = (k.value(t + h) - k.value(t - h)) / (2.0 * h);
            assert!((fd1 - k.deriv(t, 1)).abs() < 1e-4 * (1.0 + fd1.abs()));
            let fd2 = (k.value(t + h) - 2.0 * k.value(t) + k.value(t - h)) / (h * h);
            assert!((fd2 - k.deriv(t, 2)).abs() < 1e-2 * (1.0 + fd2.abs()));
        }
    }
}
