//! Support extraction: thresholding, clustering, and least-squares debiasing.

use crate::grid::FineGrid;
use crate::solution::{Estimate, SparseSolution};
use nalgebra::DMatrix;
use num_complex::Complex64;
use sr_core::{fractional_time_shift, frequency_shift, Measurement, ProbingSignal};
use std::collections::BTreeMap;
use std::f64::consts::TAU;

#[derive(Debug, Clone, Copy)]
pub struct ExtractConfig {
    /// Coefficients below this fraction of the largest magnitude are dropped
    /// before clustering.
    pub threshold_frac: f64,
    /// Chebyshev radius (in fine-grid cells, wrap-around) merged into one cluster.
    pub cluster_radius: usize,
}

impl Default for ExtractConfig {
    fn default() -> Self {
        Self {
            threshold_frac: 1e-3,
            cluster_radius: 1,
        }
    }
}

/// Merge nonzero grid coefficients into clusters, take magnitude-weighted
/// circular centroids as location estimates, then refit the gains by least
/// squares against the measurement.
pub fn extract_and_debias(
    sol: &SparseSolution,
    y: &Measurement,
    x: &ProbingSignal,
    grid: &FineGrid,
    cfg: &ExtractConfig,
) -> SparseSolution {
    let mut out = sol.clone();
    out.estimates.clear();

    let max_mag = sol
        .coeffs
        .values()
        .map(|v| v.norm())
        .fold(0.0f64, f64::max);
    if max_mag == 0.0 {
        return out;
    }
    let kept: BTreeMap<(usize, usize), Complex64> = sol
        .coeffs
        .iter()
        .filter(|(_, v)| v.norm() >= cfg.threshold_frac * max_mag)
        .map(|(&k, &v)| (k, v))
        .collect();

    let clusters = cluster_cells(&kept, grid.k(), cfg.cluster_radius);

    // Weighted circular centroid per cluster.
    let mut locations: Vec<(f64, f64)> = Vec::with_capacity(clusters.len());
    for cluster in &clusters {
        let mut tau_acc = Complex64::default();
        let mut nu_acc = Complex64::default();
        for &(m, n) in cluster {
            let w = kept[&(m, n)].norm();
            tau_acc += Complex64::from_polar(w, TAU * grid.tau_of(n));
            nu_acc += Complex64::from_polar(w, TAU * grid.nu_of(m));
        }
        let tau = (tau_acc.arg() / TAU).rem_euclid(1.0);
        let nu = (nu_acc.arg() / TAU).rem_euclid(1.0);
        locations.push((tau, nu));
    }

    let (gains, degenerate, residual) = debias(&locations, y, x);
    for (i, &(tau, nu)) in locations.iter().enumerate() {
        out.estimates.push(Estimate {
            b: gains[i],
            tau,
            nu,
            degenerate,
        });
    }
    out.residual_norm = residual;
    out
}

/// Union cells whose Chebyshev wrap-around distance is at most `radius`.
fn cluster_cells(
    cells: &BTreeMap<(usize, usize), Complex64>,
    k: usize,
    radius: usize,
) -> Vec<Vec<(usize, usize)>> {
    let keys: Vec<(usize, usize)> = cells.keys().copied().collect();
    let mut assigned = vec![usize::MAX; keys.len()];
    let wrap_cells = |a: usize, b: usize| -> usize {
        let d = (a as i64 - b as i64).rem_euclid(k as i64) as usize;
        d.min(k - d)
    };
    let mut clusters: Vec<Vec<(usize, usize)>> = Vec::new();
    for start in 0..keys.len() {
        if assigned[start] != usize::MAX {
            continue;
        }
        let id = clusters.len();
        let mut frontier = vec![start];
        assigned[start] = id;
        let mut members = vec![keys[start]];
        while let Some(i) = frontier.pop() {
            for j in 0..keys.len() {
                if assigned[j] != usize::MAX {
                    continue;
                }
                let dm = wrap_cells(keys[i].0, keys[j].0);
                let dn = wrap_cells(keys[i].1, keys[j].1);
                if dm.max(dn) <= radius {
                    assigned[j] = id;
                    frontier.push(j);
                    members.push(keys[j]);
                }
            }
        }
        clusters.push(members);
    }
    clusters
}

/// Least-squares gains for fixed locations; returns (gains, rank_deficient,
/// residual norm).
fn debias(
    locations: &[(f64, f64)],
    y: &Measurement,
    x: &ProbingSignal,
) -> (Vec<Complex64>, bool, f64) {
    if locations.is_empty() {
        return (Vec::new(), false, y.norm());
    }
    let l = x.len();
    let cols: Vec<Vec<Complex64>> = locations
        .iter()
        .map(|&(tau, nu)| frequency_shift(&fractional_time_shift(x, tau), nu))
        .collect();
    let a = DMatrix::from_fn(l, cols.len(), |i, j| cols[j][i]);
    let rhs = nalgebra::DVector::from_iterator(l, y.samples.iter().copied());

    let svd = a.clone().svd(true, true);
    let smax = svd.singular_values.iter().cloned().fold(0.0f64, f64::max);
    let degenerate = svd
        .singular_values
        .iter()
        .any(|&s| s < 1e-10 * smax.max(f64::MIN_POSITIVE));
    let gains = svd
        .solve(&rhs, 1e-12 * smax.max(f64::MIN_POSITIVE))
        .expect("svd solve");
    let fitted = &a * &gains;
    let residual = (&rhs - fitted).norm();
    (gains.iter().copied().collect(), degenerate, residual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fista::SolverConfig;
    use crate::solve_l1;
    use sr_core::{random_probing, synthesize, ProbeKind, Scatterer, Scene};

    #[test]
    fn empty_solution_yields_no_estimates() {
        let x = random_probing(15, 1, ProbeKind::Gaussian).unwrap();
        let grid = FineGrid::new(15, 15).unwrap();
        let sol = SparseSolution {
            coeffs: BTreeMap::new(),
            estimates: Vec::new(),
            residual_norm: 0.0,
            status: crate::SolverStatus::Converged,
            iters: 0,
        };
        let y = Measurement {
            samples: vec![Complex64::default(); 15],
        };
        let out = extract_and_debias(&sol, &y, &x, &grid, &ExtractConfig::default());
        assert!(out.estimates.is_empty());
    }

    #[test]
    fn one_sparse_solution_is_debiased_exactly() {
        let l = 31;
        let x = random_probing(l, 2, ProbeKind::Gaussian).unwrap();
        let grid = FineGrid::new(l, l).unwrap();
        let b = Complex64::new(0.7, -0.4);
        let (tau, nu) = (grid.tau_of(5), grid.nu_of(11));
        let scene = Scene::new(l, vec![Scatterer::new(b, tau, nu)]).unwrap();
        let y = synthesize(&x, &scene).unwrap();

        let sol = solve_l1(&y, &x, &grid, &SolverConfig::default()).unwrap();
        let out = extract_and_debias(&sol, &y, &x, &grid, &ExtractConfig::default());
        assert_eq!(out.estimates.len(), 1);
        let e = &out.estimates[0];
        assert!((e.tau - tau).abs() < 1e-12);
        assert!((e.nu - nu).abs() < 1e-12);
        assert!((e.b - b).norm() < 1e-8, "debias err {}", (e.b - b).norm());
        assert!(!e.degenerate);
    }

    #[test]
    fn adjacent_cells_merge_into_one_estimate() {
        let cells: BTreeMap<(usize, usize), Complex64> = [
            ((3usize, 4usize), Complex64::new(1.0, 0.0)),
            ((3, 5), Complex64::new(0.5, 0.0)),
            ((17, 20), Complex64::new(0.8, 0.0)),
        ]
        .into_iter()
        .collect();
        let clusters = cluster_cells(&cells, 30, 1);
        assert_eq!(clusters.len(), 2);
    }

    #[test]
    fn clustering_wraps_around_the_torus() {
        let cells: BTreeMap<(usize, usize), Complex64> = [
            ((0usize, 0usize), Complex64::new(1.0, 0.0)),
            ((29, 29), Complex64::new(1.0, 0.0)),
        ]
        .into_iter()
        .collect();
        let clusters = cluster_cells(&cells, 30, 1);
        assert_eq!(clusters.len(), 1);
    }
}
