//! Seeded distribution generators for Monte-Carlo experiments.
//!
//! Random numbers come from ChaCha20 (20 rounds). The 256-bit key is the
//! seed as 8 little-endian bytes followed by 24 zero bytes, and the stream
//! id is the replication index, so every `(seed, rep_index)` pair owns an
//! independent keystream. Each 64-bit draw is two consecutive 32-bit words,
//! low word first; a uniform variate in the open interval `(0, 1)` is
//! `((draw >> 11) + 0.5) * 2^-53`.
//!
//! Variates, one per observation, in order:
//!
//! | family                  | draw                                               |
//! |-------------------------|----------------------------------------------------|
//! | `lognormal(sigma)`      | `exp(sigma * sqrt(-2 ln u1) * cos(2 pi u2))`       |
//! | `pareto(alpha)`         | `u^(-1/alpha)`; survival `(1/x)^alpha`, `x >= 1`   |
//! | `uniform(low, high)`    | `low + (high - low) * u`                           |
//! | `symmetric_triangular`  | `low + (high - low) * (u1 + u2) / 2`               |
//! | `one_holder`            | `n - 1` zeros then a single 1 (no randomness)      |

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::dataset::Dataset;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Lognormal { sigma: f64 },
    Pareto { alpha: f64 },
    Uniform { low: f64, high: f64 },
    SymmetricTriangular { low: f64, high: f64 },
    OneHolder,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Lognormal { .. } => "lognormal",
            Family::Pareto { .. } => "pareto",
            Family::Uniform { .. } => "uniform",
            Family::SymmetricTriangular { .. } => "symmetric_triangular",
            Family::OneHolder => "one_holder",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    #[serde(flatten)]
    pub family: Family,
    pub sample_size: usize,
    pub replications: usize,
    pub seed: u64,
}

impl ExperimentConfig {
    pub fn new(family: Family, sample_size: usize, replications: usize, seed: u64) -> Result<Self> {
        let config = Self {
            family,
            sample_size,
            replications,
            seed,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::BadParams(msg));
        if self.sample_size < 2 {
            return bad(format!(
                "sample size must be at least 2, got {}",
                self.sample_size
            ));
        }
        if self.replications < 1 {
            return bad("replications must be at least 1, got 0".into());
        }
        match self.family {
            Family::Lognormal { sigma } if !(sigma > 0.0 && sigma.is_finite()) => bad(format!(
                "lognormal sigma must be positive and finite, got {sigma}"
            )),
            Family::Pareto { alpha } if !(alpha > 1.0 && alpha.is_finite()) => bad(format!(
                "pareto alpha must exceed 1 for a finite mean, got {alpha}"
            )),
            Family::Uniform { low, high } | Family::SymmetricTriangular { low, high }
                if !(low.is_finite() && high.is_finite() && low <= high && low + high > 0.0) =>
            {
                bad(format!(
                    "{} bounds need low <= high and a positive midpoint, got [{low}, {high}]",
                    self.family.name()
                ))
            }
            _ => Ok(()),
        }
    }
}

/// Keystream for one replication.
#[derive(Debug, Clone)]
pub struct ReplicationRng(ChaCha20Rng);

impl ReplicationRng {
    pub fn new(seed: u64, rep_index: u64) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        let mut rng = ChaCha20Rng::from_seed(key);
        rng.set_stream(rep_index);
        Self(rng)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform on the open interval `(0, 1)`.
    pub fn open01(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }

    pub fn standard_normal(&mut self) -> f64 {
        let u1 = self.open01();
        let u2 = self.open01();
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    }
}

/// Draws replication `rep_index` of the experiment. Bit-identical for identical inputs.
pub fn generate(config: &ExperimentConfig, rep_index: usize) -> Result<Dataset> {
    config.validate()?;
    if rep_index >= config.replications {
        return Err(Error::BadParams(format!(
            "replication index {rep_index} out of range (replications = {})",
            config.replications
        )));
    }
    let n = config.sample_size;
    let mut rng = ReplicationRng::new(config.seed, rep_index as u64);
    let values: Vec<f64> = match config.family {
        Family::Lognormal { sigma } => (0..n)
            .map(|_| (sigma * rng.standard_normal()).exp())
            .collect(),
        Family::Pareto { alpha } => (0..n).map(|_| rng.open01().powf(-1.0 / alpha)).collect(),
        Family::Uniform { low, high } => {
            (0..n).map(|_| low + (high - low) * rng.open01()).collect()
        }
        Family::SymmetricTriangular { low, high } => (0..n)
            .map(|_| {
                let u = rng.open01() + rng.open01();
                low + (high - low) * u / 2.0
            })
            .collect(),
        Family::OneHolder => {
            let mut v = vec![0.0; n];
            v[n - 1] = 1.0;
            v
        }
    };
    Dataset::new(values)
}

/// Adjusted Fisher-Pearson sample skewness `G1`; `None` for n < 3 or zero variance.
pub fn sample_skewness(values: &[f64]) -> Option<f64> {
    let n = values.len();
    if n < 3 {
        return None;
    }
    let nf = n as f64;
    let mean = values.iter().sum::<f64>() / nf;
    let (m2, m3) = values.iter().fold((0.0, 0.0), |(m2, m3), &x| {
        let d = x - mean;
        (m2 + d * d, m3 + d * d * d)
    });
    let (m2, m3) = (m2 / nf, m3 / nf);
    if m2 <= 0.0 {
        return None;
    }
    let g1 = m3 / m2.powf(1.5);
    Some(g1 * (nf * (nf - 1.0)).sqrt() / (nf - 2.0))
}
