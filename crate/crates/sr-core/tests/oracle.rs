//! Cross-checks of the FFT-based operators against direct O(L^2) evaluation.

use num_complex::Complex64;
use sr_core::{
    atom, fractional_time_shift, frequency_shift, gabor_column, random_probing, synthesize,
    GaborSystem, ProbeKind, ProbingSignal, Scatterer, Scene,
};
use std::f64::consts::TAU;

/// Literal evaluation of the defining triple sum
/// `[T_tau x]_p = (1/L) sum_k (sum_l x_l e^{-i2pi lk/L}) e^{-i2pi k tau} e^{i2pi pk/L}`.
fn time_shift_brute(x: &ProbingSignal, tau: f64) -> Vec<Complex64> {
    let l = x.len() as i64;
    let n = (l - 1) / 2;
    let spectrum: Vec<Complex64> = (-n..=n)
        .map(|k| {
            (-n..=n)
                .map(|ll| {
                    x.at_wrapped(ll) * Complex64::from_polar(1.0, -TAU * (ll * k) as f64 / l as f64)
                })
                .sum()
        })
        .collect();
    (-n..=n)
        .map(|p| {
            let acc: Complex64 = (-n..=n)
                .map(|k| {
                    spectrum[(k + n) as usize]
                        * Complex64::from_polar(1.0, -TAU * k as f64 * tau)
                        * Complex64::from_polar(1.0, TAU * (p * k) as f64 / l as f64)
                })
                .sum();
            acc / l as f64
        })
        .collect()
}

fn max_rel_err(a: &[Complex64], b: &[Complex64]) -> f64 {
    let scale = b
        .iter()
        .map(|v| v.norm())
        .fold(0.0f64, f64::max)
        .max(1e-300);
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm() / scale)
        .fold(0.0, f64::max)
}

fn lcg(seed: &mut u64) -> f64 {
    *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    (*seed >> 11) as f64 / (1u64 << 53) as f64
}

#[test]
fn fractional_shift_matches_triple_sum() {
    let mut seed = 0xfeed;
    for &l in &[3usize, 15, 31] {
        for trial in 0..20 {
            let x = random_probing(l, trial, ProbeKind::Gaussian).unwrap();
            let tau = lcg(&mut seed);
            let fast = fractional_time_shift(&x, tau);
            let brute = time_shift_brute(&x, tau);
            assert!(
                max_rel_err(&fast, &brute) < 1e-10,
                "L={l} tau={tau}"
            );
        }
    }
}

#[test]
fn small_case_half_shift() {
    // L = 3, x = (1, 0, 0) in logical order p = -1, 0, 1; tau = 0.5.
    let x = ProbingSignal::new(vec![
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
    ])
    .unwrap();
    let fast = fractional_time_shift(&x, 0.5);
    let brute = time_shift_brute(&x, 0.5);
    assert!(max_rel_err(&fast, &brute) < 1e-12);
}

#[test]
fn synthesize_on_natural_grid_matches_gabor_form() {
    // tau = n/L, nu = m/L: y_p = b x_{p-n} e^{i 2 pi m p / L}.
    let l = 15usize;
    let x = random_probing(l, 77, ProbeKind::Gaussian).unwrap();
    let (n_shift, m_shift) = (4i64, -6i64);
    let b = Complex64::new(0.8, -1.3);
    let scene = Scene::new(
        l,
        vec![Scatterer::new(
            b,
            n_shift as f64 / l as f64,
            (m_shift as f64 / l as f64).rem_euclid(1.0),
        )],
    )
    .unwrap();
    let y = synthesize(&x, &scene).unwrap();
    let col = gabor_column(&x, m_shift, n_shift).unwrap();
    let expect: Vec<Complex64> = col.iter().map(|v| b * v).collect();
    assert!(max_rel_err(&y.samples, &expect) < 1e-10);
}

#[test]
fn apply_atom_agrees_with_synthesize_everywhere() {
    let l = 15usize;
    let x = random_probing(l, 5, ProbeKind::Gaussian).unwrap();
    let sys = GaborSystem::new(x.clone());
    let mut seed = 0xabcd;
    for _ in 0..10 {
        let r = (lcg(&mut seed), lcg(&mut seed));
        let via_a = sys.apply(&atom(r, l));
        let scene =
            Scene::new(l, vec![Scatterer::new(Complex64::new(1.0, 0.0), r.0, r.1)]).unwrap();
        let direct = synthesize(&x, &scene).unwrap();
        assert!(max_rel_err(&via_a, &direct.samples) < 1e-10);
    }
}

#[test]
fn shift_operators_are_one_periodic() {
    let x = random_probing(15, 6, ProbeKind::Gaussian).unwrap();
    let tau = 0.3317;
    let a = fractional_time_shift(&x, tau);
    let b = fractional_time_shift(&x, tau + 1.0);
    assert!(max_rel_err(&a, &b) < 1e-12);

    let nu = 0.719;
    let c = frequency_shift(x.samples(), nu);
    let d = frequency_shift(x.samples(), nu + 1.0);
    assert!(max_rel_err(&c, &d) < 1e-12);
}
