//! Scenes, measurements and their file formats.

use crate::error::CoreError;
use crate::probe::{random_probing, ProbeKind, ProbingSignal};
use crate::Result;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::io::{BufRead, Write};

/// A point scatterer: complex gain and a time-frequency shift in [0,1)^2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scatterer {
    pub b: Complex64,
    pub tau: f64,
    pub nu: f64,
}

impl Scatterer {
    /// Shift parameters are 1-periodic; store canonical representatives.
    pub fn new(b: Complex64, tau: f64, nu: f64) -> Self {
        Self {
            b,
            tau: tau.rem_euclid(1.0),
            nu: nu.rem_euclid(1.0),
        }
    }
}

/// A collection of scatterers tied to a signal length L.
#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub l: usize,
    pub scatterers: Vec<Scatterer>,
}

impl Scene {
    pub fn new(l: usize, scatterers: Vec<Scatterer>) -> Result<Self> {
        if l == 0 || l % 2 == 0 {
            return Err(CoreError::InvalidLength(l));
        }
        for (i, a) in scatterers.iter().enumerate() {
            for b in scatterers.iter().skip(i + 1) {
                if a.tau == b.tau && a.nu == b.nu {
                    return Err(CoreError::InvalidScene(format!(
                        "duplicate time-frequency shift ({}, {})",
                        a.tau, a.nu
                    )));
                }
            }
        }
        Ok(Self { l, scatterers })
    }
}

/// Received samples y_p, p = -N..=N, stored at slot p + N.
#[derive(Debug, Clone, PartialEq)]
pub struct Measurement {
    pub samples: Vec<Complex64>,
}

impl Measurement {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn norm(&self) -> f64 {
        self.samples.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// CSV with columns `p,re,im`, one row per sample.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        let n = (self.samples.len() as i64 - 1) / 2;
        writeln!(w, "p,re,im")?;
        for (slot, v) in self.samples.iter().enumerate() {
            writeln!(w, "{},{:e},{:e}", slot as i64 - n, v.re, v.im)?;
        }
        Ok(())
    }

    pub fn read_csv<R: BufRead>(r: R) -> Result<Self> {
        let mut rows: Vec<(i64, Complex64)> = Vec::new();
        for (idx, line) in r.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || (idx == 0 && line.starts_with('p')) {
                continue;
            }
            let mut parts = line.split(',');
            let parse = |s: Option<&str>| -> std::result::Result<f64, CoreError> {
                s.ok_or(CoreError::CsvParse {
                    line: idx + 1,
                    msg: "missing field".into(),
                })?
                .trim()
                .parse::<f64>()
                .map_err(|e| CoreError::CsvParse {
                    line: idx + 1,
                    msg: e.to_string(),
                })
            };
            let p = parse(parts.next())? as i64;
            let re = parse(parts.next())?;
            let im = parse(parts.next())?;
            rows.push((p, Complex64::new(re, im)));
        }
        rows.sort_by_key(|(p, _)| *p);
        Ok(Self {
            samples: rows.into_iter().map(|(_, v)| v).collect(),
        })
    }
}

/// On-disk scene description.
///
/// ```json
/// { "L": 63, "scatterers": [{"b_re": 1.0, "b_im": 0.0, "tau": 0.1, "nu": 0.7}],
///   "seed": 11, "probe_kind": "gaussian" }
/// ```
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SceneFile {
    #[serde(rename = "L")]
    pub l: usize,
    pub scatterers: Vec<ScattererRecord>,
    pub seed: u64,
    pub probe_kind: ProbeKind,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScattererRecord {
    pub b_re: f64,
    pub b_im: f64,
    pub tau: f64,
    pub nu: f64,
}

impl From<Scatterer> for ScattererRecord {
    fn from(s: Scatterer) -> Self {
        Self {
            b_re: s.b.re,
            b_im: s.b.im,
            tau: s.tau,
            nu: s.nu,
        }
    }
}

impl From<&ScattererRecord> for Scatterer {
    fn from(r: &ScattererRecord) -> Self {
        Scatterer::new(Complex64::new(r.b_re, r.b_im), r.tau, r.nu)
    }
}

impl SceneFile {
    pub fn from_scene(scene: &Scene, seed: u64, probe_kind: ProbeKind) -> Self {
        Self {
            l: scene.l,
            scatterers: scene.scatterers.iter().copied().map(Into::into).collect(),
            seed,
            probe_kind,
        }
    }

    pub fn scene(&self) -> Result<Scene> {
        Scene::new(self.l, self.scatterers.iter().map(Into::into).collect())
    }

    /// The probing signal this scene was (or will be) measured with.
    pub fn probe(&self) -> Result<ProbingSignal> {
        random_probing(self.l, self.seed, self.probe_kind)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scene_rejects_duplicates() {
        let s = Scatterer::new(Complex64::new(1.0, 0.0), 0.25, 0.5);
        assert!(Scene::new(5, vec![s, s]).is_err());
    }

    #[test]
    fn scene_file_roundtrip() {
        let scene = Scene::new(
            7,
            vec![
                Scatterer::new(Complex64::new(1.0, -0.5), 0.1, 0.9),
                Scatterer::new(Complex64::new(0.0, 2.0), 0.4, 0.4),
            ],
        )
        .unwrap();
        let file = SceneFile::from_scene(&scene, 42, ProbeKind::Signs);
        let back = SceneFile::from_json(&file.to_json().unwrap()).unwrap();
        assert_eq!(back.scene().unwrap(), scene);
        assert_eq!(back.seed, 42);
    }

    #[test]
    fn measurement_csv_roundtrip() {
        let m = Measurement {
            samples: vec![
                Complex64::new(0.5, -1.25),
                Complex64::new(0.0, 3.0),
                Complex64::new(-2.0, 0.125),
            ],
        };
        let mut buf = Vec::new();
        m.write_csv(&mut buf).unwrap();
        let back = Measurement::read_csv(buf.as_slice()).unwrap();
        assert_eq!(m, back);
    }
}
