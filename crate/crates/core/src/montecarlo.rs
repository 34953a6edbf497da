//! Sampling `γ(π)` on long paths for uniformly random revelation orders.
//!
//! Samples are grouped into fixed blocks of [`BLOCK_SAMPLES`]. Block `b` draws
//! from a ChaCha8 stream keyed by `(seed, b)`, so the histogram is a pure
//! function of `(n, samples, seed)` whatever the worker count.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::domination::PathRunner;
use crate::error::{invalid, Error, Result};
use crate::expectation::{gamma_o_path_f64_table, gamma_o_path_recurrence, rational_to_f64};
use crate::extremal::{max_dominating_size, min_dominating_size};

pub const BLOCK_SAMPLES: u64 = 1024;

/// Default cap on `n * samples`.
pub const DEFAULT_WORK_BUDGET: u64 = 20_000_000_000;

// Above this the exact mean is replaced by the floating-point recurrence.
const EXACT_MEAN_LIMIT: usize = 5000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    #[default]
    None,
    PerVertex,
    Centered,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleConfig {
    pub n: usize,
    pub samples: u64,
    pub seed: u64,
    pub workers: usize,
    pub normalization: Normalization,
    pub work_budget: u64,
}

impl SampleConfig {
    pub fn new(n: usize, samples: u64, seed: u64) -> Self {
        SampleConfig {
            n,
            samples,
            seed,
            workers: 1,
            normalization: Normalization::None,
            work_budget: DEFAULT_WORK_BUDGET,
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(invalid("n must be at least 1"));
        }
        if self.samples < 1 {
            return Err(invalid("samples must be at least 1"));
        }
        if self.workers < 1 {
            return Err(invalid("workers must be at least 1"));
        }
        let work = (self.n as u64).saturating_mul(self.samples);
        if work > self.work_budget {
            return Err(Error::ResourceLimit {
                what: format!("n * samples = {work}"),
                limit: self.work_budget,
                override_flag: "--work-budget",
            });
        }
        Ok(())
    }
}

/// Exact-valued histogram of sampled `γ`.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    pub n: usize,
    pub seed: u64,
    pub bins: BTreeMap<usize, u64>,
    pub total: u64,
    pub mean: f64,
    /// Unbiased sample variance; zero for a single sample.
    pub variance: f64,
}

/// The JSON sidecar written next to a histogram.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HistogramSummary {
    pub n: usize,
    pub samples: u64,
    pub seed: u64,
    pub mean: f64,
    pub variance: f64,
    pub min: usize,
    pub max: usize,
}

impl Histogram {
    fn from_bins(n: usize, seed: u64, bins: BTreeMap<usize, u64>) -> Self {
        let total: u64 = bins.values().sum();
        let (mut s1, mut s2) = (0u128, 0u128);
        for (&g, &c) in &bins {
            let (g, c) = (g as u128, c as u128);
            s1 += g * c;
            s2 += g * g * c;
        }
        let t = total as f64;
        let mean = s1 as f64 / t;
        let variance = if total > 1 {
            // Σ (g - mean)² = s2 - s1²/t, done in integers first
            let centered = (s2 * total as u128 - s1 * s1) as f64 / t;
            centered / (t - 1.0)
        } else {
            0.0
        };
        Histogram {
            n,
            seed,
            bins,
            total,
            mean,
            variance,
        }
    }

    pub fn std_dev(&self) -> f64 {
        self.variance.sqrt()
    }

    /// Standard error of the sample mean.
    pub fn std_error(&self) -> f64 {
        self.std_dev() / (self.total as f64).sqrt()
    }

    pub fn min(&self) -> usize {
        *self.bins.keys().next().expect("non-empty histogram")
    }

    pub fn max(&self) -> usize {
        *self.bins.keys().next_back().expect("non-empty histogram")
    }

    pub fn summary(&self) -> HistogramSummary {
        HistogramSummary {
            n: self.n,
            samples: self.total,
            seed: self.seed,
            mean: self.mean,
            variance: self.variance,
            min: self.min(),
            max: self.max(),
        }
    }
}

fn sample_block(n: usize, seed: u64, block: u64, count: u64, lo: usize, width: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block);
    let mut order: Vec<u32> = (1..=n as u32).collect();
    let mut runner = PathRunner::new(n);
    let mut counts = vec![0u64; width];
    for _ in 0..count {
        order.shuffle(&mut rng);
        counts[runner.gamma(&order) - lo] += 1;
    }
    counts
}

/// Draws `config.samples` uniform orders of `path(n)` and tallies `γ`.
pub fn sample_gamma(config: &SampleConfig) -> Result<Histogram> {
    config.validate()?;
    let n = config.n;
    let (lo, hi) = (min_dominating_size(n), max_dominating_size(n));
    let width = hi - lo + 1;
    let blocks = config.samples.div_ceil(BLOCK_SAMPLES);
    let run = |b: u64| {
        let count = BLOCK_SAMPLES.min(config.samples - b * BLOCK_SAMPLES);
        sample_block(n, config.seed, b, count, lo, width)
    };
    let parts: Vec<Vec<u64>> = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| invalid(format!("cannot start worker pool: {e}")))?
        .install(|| (0..blocks).into_par_iter().map(run).collect());

    let mut merged = vec![0u64; width];
    for part in parts {
        merged.iter_mut().zip(part).for_each(|(a, b)| *a += b);
    }
    let bins = merged
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .map(|(i, c)| (lo + i, c))
        .collect();
    Ok(Histogram::from_bins(n, config.seed, bins))
}

/// Expected `γ` on `path(n)` as a float, exact below a size threshold.
pub fn exact_mean(n: usize) -> f64 {
    if n <= EXACT_MEAN_LIMIT {
        rational_to_f64(&gamma_o_path_recurrence(n))
    } else {
        gamma_o_path_f64_table(n)[n]
    }
}

/// `(x, relative frequency)` points for plotting. `x` is `γ` itself, `γ/n`,
/// or `(γ - E γ)/n` depending on `mode`.
pub fn normalize(hist: &Histogram, mode: Normalization) -> Vec<(f64, f64)> {
    let n = hist.n as f64;
    let shift = match mode {
        Normalization::Centered => exact_mean(hist.n),
        _ => 0.0,
    };
    hist.bins
        .iter()
        .map(|(&g, &c)| {
            let x = match mode {
                Normalization::None => g as f64,
                Normalization::PerVertex => g as f64 / n,
                Normalization::Centered => (g as f64 - shift) / n,
            };
            (x, c as f64 / hist.total as f64)
        })
        .collect()
}
