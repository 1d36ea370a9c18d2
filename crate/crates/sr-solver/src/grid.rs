//! The fine recovery grid.

use crate::{Result, SolverError};

/// Optional restriction of the grid to a corner of the torus.
///
/// When the physical delays and Doppler shifts are known to lie in a small
/// box, only the columns with tau < tau_max_frac and nu < nu_max_frac need to
/// be kept, shrinking the problem without giving up the fast transforms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridRegion {
    pub tau_max_frac: f64,
    pub nu_max_frac: f64,
}

/// Grid with spacing (1/K, 1/K), K >= L; SRF = K/L.
#[derive(Debug, Clone, PartialEq)]
pub struct FineGrid {
    l: usize,
    k: usize,
    region: Option<GridRegion>,
}

impl FineGrid {
    pub fn new(l: usize, k: usize) -> Result<Self> {
        Self::with_region(l, k, None)
    }

    pub fn with_region(l: usize, k: usize, region: Option<GridRegion>) -> Result<Self> {
        if l == 0 || l % 2 == 0 {
            return Err(SolverError::Grid(format!("L must be odd, got {l}")));
        }
        if k < l {
            return Err(SolverError::Grid(format!("K = {k} must be >= L = {l}")));
        }
        if let Some(r) = region {
            if !(r.tau_max_frac > 0.0 && r.tau_max_frac <= 1.0)
                || !(r.nu_max_frac > 0.0 && r.nu_max_frac <= 1.0)
            {
                return Err(SolverError::Grid(format!(
                    "region fractions must lie in (0, 1], got ({}, {})",
                    r.tau_max_frac, r.nu_max_frac
                )));
            }
        }
        Ok(Self { l, k, region })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn srf(&self) -> f64 {
        self.k as f64 / self.l as f64
    }

    pub fn region(&self) -> Option<GridRegion> {
        self.region
    }

    /// Number of active tau grid points (the n axis).
    pub fn n_count(&self) -> usize {
        match self.region {
            Some(r) => ((r.tau_max_frac * self.k as f64).ceil() as usize).clamp(1, self.k),
            None => self.k,
        }
    }

    /// Number of active nu grid points (the m axis).
    pub fn m_count(&self) -> usize {
        match self.region {
            Some(r) => ((r.nu_max_frac * self.k as f64).ceil() as usize).clamp(1, self.k),
            None => self.k,
        }
    }

    /// Total active column count.
    pub fn coeff_len(&self) -> usize {
        self.n_count() * self.m_count()
    }

    /// Flat index of grid point (m, n); coefficients are stored n-major.
    pub fn flat(&self, m: usize, n: usize) -> usize {
        debug_assert!(m < self.m_count() && n < self.n_count());
        n * self.m_count() + m
    }

    /// Inverse of [`Self::flat`]: returns (m, n).
    pub fn unflat(&self, idx: usize) -> (usize, usize) {
        (idx % self.m_count(), idx / self.m_count())
    }

    pub fn tau_of(&self, n: usize) -> f64 {
        n as f64 / self.k as f64
    }

    pub fn nu_of(&self, m: usize) -> f64 {
        m as f64 / self.k as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn restriction_shrinks_column_count() {
        let g = FineGrid::with_region(
            201,
            402,
            Some(GridRegion {
                tau_max_frac: 0.15,
                nu_max_frac: 0.25,
            }),
        )
        .unwrap();
        assert_eq!(g.n_count(), (0.15f64 * 402.0).ceil() as usize);
        assert_eq!(g.m_count(), (0.25f64 * 402.0).ceil() as usize);
        assert!(g.coeff_len() <= 402 * 402);
        assert_eq!(g.srf(), 2.0);
    }

    #[test]
    fn flat_roundtrip() {
        let g = FineGrid::new(15, 30).unwrap();
        for idx in [0usize, 1, 29, 30, 899] {
            let (m, n) = g.unflat(idx);
            assert_eq!(g.flat(m, n), idx);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(FineGrid::new(14, 28).is_err());
        assert!(FineGrid::new(15, 14).is_err());
        assert!(FineGrid::with_region(
            15,
            15,
            Some(GridRegion {
                tau_max_frac: 0.0,
                nu_max_frac: 0.5
            })
        )
        .is_err());
    }
}
