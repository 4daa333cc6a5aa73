//! Independent trials of the k-tree process.
//!
//! Trial `i` of an experiment seeded with `s` generates from
//! [`trial_seed`](crate::rng::trial_seed)`(s, i)`. Results are collected in
//! trial order, so aggregates do not depend on thread scheduling.

use rayon::prelude::*;

use super::histogram::{degree_histogram, DegreeHistogram};
use crate::error::{Error, Result};
use crate::generator::{generate, ProcessParams};
use crate::rng::trial_seed;

/// Runs trials on a rayon pool of `threads` workers, or on the global pool
/// when `threads` is `None`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TrialRunner {
    pub threads: Option<usize>,
}

impl TrialRunner {
    pub fn new(threads: Option<usize>) -> Self {
        Self { threads }
    }

    pub fn single_threaded() -> Self {
        Self { threads: Some(1) }
    }

    /// Applies `f` to every seed; output order follows `seeds`.
    pub fn map<R, F>(&self, seeds: &[u64], f: F) -> Result<Vec<R>>
    where
        R: Send,
        F: Fn(u64) -> Result<R> + Sync + Send,
    {
        let run = || seeds.par_iter().map(|&s| f(s)).collect::<Result<Vec<R>>>();
        match self.threads {
            None => run(),
            Some(t) => rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?
                .install(run),
        }
    }

    /// Degree histogram of each trial.
    pub fn histograms(&self, k: usize, n: usize, seeds: &[u64]) -> Result<Vec<DegreeHistogram>> {
        ProcessParams::new(k, n, 0)?;
        self.map(seeds, |seed| {
            let tree = generate(ProcessParams { k, n, seed })?;
            Ok(degree_histogram(tree.adjacency(), k))
        })
    }

    /// Sum of the per-trial histograms.
    pub fn aggregate_histogram(
        &self,
        k: usize,
        n: usize,
        seeds: &[u64],
    ) -> Result<DegreeHistogram> {
        let mut hists = self.histograms(k, n, seeds)?.into_iter();
        let mut total = hists
            .next()
            .ok_or_else(|| Error::InvalidParams("no trials".into()))?;
        for h in hists {
            total.merge(&h)?;
        }
        Ok(total)
    }
}

/// Seeds of trials `0..trials` derived from one experiment seed.
pub fn trial_seeds(seed: u64, trials: usize) -> Vec<u64> {
    (0..trials as u64).map(|i| trial_seed(seed, i)).collect()
}
