//! Probing signals and their random generation.

use crate::error::CoreError;
use crate::Result;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

/// Distribution family for randomly drawn probing signals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProbeKind {
    /// Real samples, i.i.d. N(0, 1/L).
    Gaussian,
    /// Random signs, +-1/sqrt(L).
    Signs,
    /// Circularly symmetric complex Gaussian with E|x|^2 = 1/L.
    ComplexGaussian,
}

/// Length-L probing signal, L odd, logical indices p = -N..=N.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbingSignal {
    samples: Vec<Complex64>,
}

impl ProbingSignal {
    pub fn new(samples: Vec<Complex64>) -> Result<Self> {
        if samples.is_empty() || samples.len() % 2 == 0 {
            return Err(CoreError::InvalidLength(samples.len()));
        }
        Ok(Self { samples })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// N = (L-1)/2.
    pub fn half(&self) -> usize {
        (self.samples.len() - 1) / 2
    }

    /// Slot view: sample with logical index p sits at slot p + N.
    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    /// Sample at logical index p, reduced mod L (circular).
    pub fn at_wrapped(&self, p: i64) -> Complex64 {
        let l = self.samples.len() as i64;
        let n = self.half() as i64;
        let slot = (p + n).rem_euclid(l);
        self.samples[slot as usize]
    }

    pub fn energy(&self) -> f64 {
        self.samples.iter().map(|v| v.norm_sqr()).sum()
    }
}

/// Draw a deterministic random probing signal of odd length `l`.
pub fn random_probing(l: usize, seed: u64, kind: ProbeKind) -> Result<ProbingSignal> {
    random_probing_scaled(l, seed, kind, 1.0 / l as f64)
}

/// Same as [`random_probing`] but with an explicit per-sample variance.
///
/// MIMO probing uses variance 1/(N_T L) so that the stacked transmit energy
/// stays comparable to the single-antenna case.
pub fn random_probing_scaled(
    l: usize,
    seed: u64,
    kind: ProbeKind,
    variance: f64,
) -> Result<ProbingSignal> {
    if l == 0 || l % 2 == 0 {
        return Err(CoreError::InvalidLength(l));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sigma = variance.sqrt();
    let samples = match kind {
        ProbeKind::Gaussian => {
            let normal = Normal::new(0.0, sigma).expect("valid sigma");
            (0..l)
                .map(|_| Complex64::new(normal.sample(&mut rng), 0.0))
                .collect()
        }
        ProbeKind::Signs => (0..l)
            .map(|_| {
                let s = if rng.random::<bool>() { sigma } else { -sigma };
                Complex64::new(s, 0.0)
            })
            .collect(),
        ProbeKind::ComplexGaussian => {
            let normal = Normal::new(0.0, sigma / 2f64.sqrt()).expect("valid sigma");
            (0..l)
                .map(|_| Complex64::new(normal.sample(&mut rng), normal.sample(&mut rng)))
                .collect()
        }
    };
    ProbingSignal::new(samples)
}
