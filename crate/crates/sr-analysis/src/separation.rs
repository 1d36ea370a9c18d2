//! Wrap-around metric and minimum-separation checks.

use crate::AnalysisError;

/// Wrap-around distance on the unit circle: both inputs taken mod 1.
///
/// `wrap_distance(3/4, 1/2) = 1/4` and `wrap_distance(5/6, 1/6) = 1/3`.
pub fn wrap_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(1.0);
    d.min(1.0 - d)
}

/// Outcome of a pairwise separation check.
///
/// For the SISO rule, `min_pairwise` and `threshold` are in raw wrap-around
/// distance. For the MIMO OR-rule the three per-axis thresholds differ, so the
/// report is normalized: each pair contributes `max_axis(dist / threshold)`
/// and `threshold` is 1.
#[derive(Debug, Clone)]
pub struct SeparationReport {
    pub min_pairwise: f64,
    pub satisfied: bool,
    pub threshold: f64,
    pub violating_pairs: Vec<(usize, usize)>,
}

/// SISO minimum separation: every pair must satisfy
/// `max(|tau - tau'|, |nu - nu'|) >= 2.38 / N` in wrap-around distance.
///
/// Separation in a single coordinate suffices; a single node passes vacuously.
pub fn check_separation_siso(nodes: &[(f64, f64)], l: usize) -> Result<SeparationReport, AnalysisError> {
    if l < 3 || l % 2 == 0 {
        return Err(AnalysisError::InvalidLength(l));
    }
    let n = (l - 1) / 2;
    let threshold = 2.38 / n as f64;
    let mut min_pairwise = f64::INFINITY;
    let mut violating = Vec::new();
    for i in 0..nodes.len() {
        for j in (i + 1)..nodes.len() {
            let d = wrap_distance(nodes[i].0, nodes[j].0)
                .max(wrap_distance(nodes[i].1, nodes[j].1));
            if d < min_pairwise {
                min_pairwise = d;
            }
            if d < threshold {
                violating.push((i, j));
            }
        }
    }
    Ok(SeparationReport {
        min_pairwise,
        satisfied: violating.is_empty(),
        threshold,
        violating_pairs: violating,
    })
}

/// MIMO minimum separation OR-rule: a pair is separated when
/// `|beta - beta'| >= 10/(N_T N_R - 1)` or `|tau - tau'| >= 5/N` or
/// `|nu - nu'| >= 5/N`, all wrap-around.
pub fn check_separation_mimo(
    nodes: &[(f64, f64, f64)],
    n_t: usize,
    n_r: usize,
    l: usize,
) -> Result<SeparationReport, AnalysisError> {
    if l < 3 || l % 2 == 0 {
        return Err(AnalysisError::InvalidLength(l));
    }
    let n = ((l - 1) / 2) as f64;
    let virt = n_t * n_r;
    // A single virtual antenna leaves no angular aperture at all.
    let beta_threshold = if virt > 1 {
        10.0 / (virt - 1) as f64
    } else {
        f64::INFINITY
    };
    let tf_threshold = 5.0 / n;

    let mut min_pairwise = f64::INFINITY;
    let mut violating = Vec::new();
    for i in 0..nodes.len() {
        for j in (i + 1)..nodes.len() {
            let (b1, t1, v1) = nodes[i];
            let (b2, t2, v2) = nodes[j];
            let ratio = (wrap_distance(b1, b2) / beta_threshold)
                .max(wrap_distance(t1, t2) / tf_threshold)
                .max(wrap_distance(v1, v2) / tf_threshold);
            if ratio < min_pairwise {
                min_pairwise = ratio;
            }
            if ratio < 1.0 {
                violating.push((i, j));
            }
        }
    }
    Ok(SeparationReport {
        min_pairwise,
        satisfied: violating.is_empty(),
        threshold: 1.0,
        violating_pairs: violating,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_wrap_distances() {
        assert!((wrap_distance(0.75, 0.5) - 0.25).abs() < 1e-15);
        assert!((wrap_distance(5.0 / 6.0, 1.0 / 6.0) - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(wrap_distance(0.42, 0.42), 0.0);
    }

    #[test]
    fn siso_single_coordinate_separation_suffices() {
        // Equal tau, nu separated by 3/N: the max rule passes.
        let l = 31;
        let n = 15.0;
        let nodes = [(0.3, 0.2), (0.3, 0.2 + 3.0 / n)];
        let rep = check_separation_siso(&nodes, l).unwrap();
        assert!(rep.satisfied, "{rep:?}");
    }

    #[test]
    fn siso_identical_nodes_violate() {
        let rep = check_separation_siso(&[(0.1, 0.1), (0.1, 0.1)], 31).unwrap();
        assert!(!rep.satisfied);
        assert_eq!(rep.violating_pairs, vec![(0, 1)]);
        assert_eq!(rep.min_pairwise, 0.0);
    }

    #[test]
    fn siso_single_node_vacuous() {
        let rep = check_separation_siso(&[(0.5, 0.5)], 31).unwrap();
        assert!(rep.satisfied);
        assert!(rep.min_pairwise.is_infinite());
    }

    #[test]
    fn mimo_beta_only_separation() {
        // 9x9 antennas: beta threshold 10/80 = 0.125, so a pair separated
        // only in beta by 0.5 passes the OR-rule.
        let nodes = [(0.0, 0.1, 0.1), (0.5, 0.1, 0.1)];
        let rep = check_separation_mimo(&nodes, 9, 9, 41).unwrap();
        assert!(rep.satisfied, "{rep:?}");
    }

    #[test]
    fn mimo_small_array_cannot_separate_in_beta_alone() {
        // With N_T N_R = 9 the beta threshold 10/8 exceeds the largest
        // possible wrap distance; separation must come from tau or nu.
        let nodes = [(0.0, 0.1, 0.1), (0.5, 0.1, 0.1)];
        let rep = check_separation_mimo(&nodes, 3, 3, 41).unwrap();
        assert!(!rep.satisfied);
    }

    #[test]
    fn mimo_tau_only_separation() {
        let l = 41;
        let n = 20.0;
        let nodes = [(0.2, 0.1, 0.3), (0.2, 0.1 + 6.0 / n, 0.3)];
        let rep = check_separation_mimo(&nodes, 3, 3, l).unwrap();
        assert!(rep.satisfied, "{rep:?}");
    }

    #[test]
    fn mimo_identical_triplets_violate() {
        let nodes = [(0.2, 0.1, 0.3), (0.2, 0.1, 0.3)];
        let rep = check_separation_mimo(&nodes, 3, 3, 41).unwrap();
        assert!(!rep.satisfied);
    }
}
