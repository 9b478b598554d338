//! Monte Carlo estimates of the probability that a uniformly random
//! unlabeled graph is universally solvable.
//!
//! Trial `i` draws from its own ChaCha8 stream: the key comes from the seed
//! and the stream id is `i`. Any split of trial indices across workers
//! therefore yields the same per-trial outcomes and the same counts.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sampler::{selector_for, PartitionSelector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EstimateMode {
    /// Uniform over all unlabeled graphs.
    All,
    /// Uniform over connected unlabeled graphs (rejection sampling).
    Connected,
}

impl EstimateMode {
    pub fn as_str(self) -> &'static str {
        match self {
            EstimateMode::All => "all",
            EstimateMode::Connected => "connected",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EstimateRequest {
    pub n: usize,
    pub trials: u64,
    pub mode: EstimateMode,
    pub seed: u64,
    pub workers: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EstimateResult {
    pub request: EstimateRequest,
    pub solvable_count: u64,
    /// All-graphs mode only.
    pub connected_count: Option<u64>,
    pub p_solvable: f64,
    pub p_connected: Option<f64>,
    pub moe95: f64,
    /// Disconnected draws discarded in connected mode.
    pub rejected_draws: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Independent random stream for one trial.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// The graph used by trial `trial`, plus rejected draws in connected mode.
pub fn trial_graph(
    selector: &PartitionSelector,
    mode: EstimateMode,
    seed: u64,
    trial: u64,
) -> Result<(Graph, u64)> {
    let mut rng = trial_rng(seed, trial);
    match mode {
        EstimateMode::All => Ok((selector.sample_graph(&mut rng)?, 0)),
        EstimateMode::Connected => selector.sample_connected_graph(&mut rng),
    }
}

#[derive(Clone, Copy, Default)]
struct Counts {
    solvable: u64,
    connected: u64,
    rejected: u64,
}

fn run_range(
    selector: &PartitionSelector,
    mode: EstimateMode,
    seed: u64,
    trials: std::ops::Range<u64>,
) -> Result<Counts> {
    let mut c = Counts::default();
    for t in trials {
        let (g, rejected) = trial_graph(selector, mode, seed, t)?;
        c.rejected += rejected;
        c.solvable += g.is_universally_solvable() as u64;
        if mode == EstimateMode::All {
            c.connected += g.is_connected() as u64;
        }
    }
    Ok(c)
}

const CHUNK: u64 = 4096;

pub fn run_estimate(req: &EstimateRequest) -> Result<EstimateResult> {
    let selector = selector_for(req.n)?;
    run_estimate_with(req, &selector)
}

/// Runs `req` with a prepared class selector for `req.n`.
pub fn run_estimate_with(
    req: &EstimateRequest,
    selector: &PartitionSelector,
) -> Result<EstimateResult> {
    if req.trials == 0 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    if req.workers == 0 {
        return Err(Error::invalid("workers must be at least 1"));
    }
    if selector.n() != req.n {
        return Err(Error::invalid("selector built for a different n"));
    }
    let started = Instant::now();
    let counts = if req.workers == 1 {
        run_range(selector, req.mode, req.seed, 0..req.trials)?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(req.workers)
            .build()
            .map_err(|e| Error::internal(format!("thread pool: {e}")))?;
        let chunks: Vec<std::ops::Range<u64>> = (0..req.trials.div_ceil(CHUNK))
            .map(|k| k * CHUNK..((k + 1) * CHUNK).min(req.trials))
            .collect();
        pool.install(|| {
            chunks
                .into_par_iter()
                .map(|r| run_range(selector, req.mode, req.seed, r))
                .try_reduce(Counts::default, |a, b| {
                    Ok(Counts {
                        solvable: a.solvable + b.solvable,
                        connected: a.connected + b.connected,
                        rejected: a.rejected + b.rejected,
                    })
                })
        })?
    };
    let trials = req.trials as f64;
    let p_solvable = counts.solvable as f64 / trials;
    let (connected_count, p_connected) = match req.mode {
        EstimateMode::All => (
            Some(counts.connected),
            Some(counts.connected as f64 / trials),
        ),
        EstimateMode::Connected => (None, None),
    };
    Ok(EstimateResult {
        request: req.clone(),
        solvable_count: counts.solvable,
        connected_count,
        p_solvable,
        p_connected,
        moe95: margin_of_error(p_solvable, req.trials, 0.95)?,
        rejected_draws: counts.rejected,
        elapsed: started.elapsed(),
    })
}

/// Wald half-width `z * sqrt(p(1-p)/trials)` for a two-sided interval.
pub fn margin_of_error(p_hat: f64, trials: u64, confidence: f64) -> Result<f64> {
    if !(confidence > 0.0 && confidence < 1.0) {
        return Err(Error::invalid(format!(
            "confidence {confidence} is not in (0, 1)"
        )));
    }
    if !(0.0..=1.0).contains(&p_hat) {
        return Err(Error::invalid(format!(
            "proportion {p_hat} is not in [0, 1]"
        )));
    }
    if trials == 0 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    let z = Normal::new(0.0, 1.0)
        .expect("standard normal")
        .inverse_cdf(1.0 - (1.0 - confidence) / 2.0);
    Ok(z * (p_hat * (1.0 - p_hat) / trials as f64).sqrt())
}
