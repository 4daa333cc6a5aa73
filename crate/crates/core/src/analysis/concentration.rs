use serde::Serialize;

use super::experiment::{trial_seeds, TrialRunner};
use crate::error::{Error, Result};
use crate::generator::{generate, ProcessParams};
use crate::theory::{azuma_lambda, default_d_max, expected_histogram_dp};

/// Largest `n` for which the exact expectation replaces the sample mean.
pub const EXACT_EXPECTATION_MAX_N: usize = 10_000;

/// Confidence level of the reported deviation threshold.
pub const AZUMA_LEVEL: f64 = 0.01;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExpectationSource {
    SampleMean,
    ExactRecurrence,
}

/// Spread of `X_d(n)` across independent trials versus the Azuma threshold.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConcentrationReport {
    pub k: usize,
    pub n: usize,
    pub d: usize,
    pub trials: usize,
    pub seeds: Vec<u64>,
    pub counts: Vec<u64>,
    pub mean: f64,
    pub sample_std: f64,
    /// Expectation that deviations are measured from.
    pub expectation: f64,
    pub expectation_source: ExpectationSource,
    pub max_abs_deviation: f64,
    /// `lambda` with `exp(-lambda^2 / (8kn)) = 0.01`.
    pub azuma_lambda_at_1pct: f64,
    /// Trials with `|X_d - expectation| > azuma_lambda_at_1pct`.
    pub violations: usize,
}

pub fn concentration_experiment(
    k: usize,
    n: usize,
    d: usize,
    trials: usize,
    seed: u64,
    runner: TrialRunner,
) -> Result<ConcentrationReport> {
    concentration_experiment_with_seeds(k, n, d, &trial_seeds(seed, trials), runner)
}

/// One trial per entry of `seeds`.
pub fn concentration_experiment_with_seeds(
    k: usize,
    n: usize,
    d: usize,
    seeds: &[u64],
    runner: TrialRunner,
) -> Result<ConcentrationReport> {
    ProcessParams::new(k, n, 0)?;
    if seeds.len() < 2 {
        return Err(Error::InvalidParams(format!(
            "trials={}, need at least 2",
            seeds.len()
        )));
    }
    if d < k {
        return Err(Error::DegreeBelowK { k, d });
    }
    let counts = runner.map(seeds, |seed| {
        let tree = generate(ProcessParams { k, n, seed })?;
        Ok(tree.adjacency().degrees().filter(|&x| x == d).count() as u64)
    })?;

    let trials = counts.len();
    let mean = counts.iter().sum::<u64>() as f64 / trials as f64;
    let var = counts
        .iter()
        .map(|&c| (c as f64 - mean).powi(2))
        .sum::<f64>()
        / (trials - 1) as f64;

    let exact_range = n <= EXACT_EXPECTATION_MAX_N && n >= k + 2 && d <= default_d_max(k, n);
    let (expectation, expectation_source) = if exact_range {
        let table = expected_histogram_dp::<f64>(k, n, default_d_max(k, n))?;
        (table.get(d), ExpectationSource::ExactRecurrence)
    } else {
        (mean, ExpectationSource::SampleMean)
    };

    let lambda: f64 = azuma_lambda(k, n, AZUMA_LEVEL)?;
    let deviations = counts.iter().map(|&c| (c as f64 - expectation).abs());
    let max_abs_deviation = deviations.clone().fold(0.0, f64::max);
    let violations = deviations.filter(|&x| x > lambda).count();

    Ok(ConcentrationReport {
        k,
        n,
        d,
        trials,
        seeds: seeds.to_vec(),
        counts,
        mean,
        sample_std: var.sqrt(),
        expectation,
        expectation_source,
        max_abs_deviation,
        azuma_lambda_at_1pct: lambda,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_seeds_collapse() {
        let r = concentration_experiment_with_seeds(2, 3000, 2, &[9; 6], TrialRunner::default())
            .unwrap();
        assert_eq!(r.sample_std, 0.0);
        assert!(r.counts.iter().all(|&c| c == r.counts[0]));
        assert_eq!(r.mean, r.counts[0] as f64);
    }

    #[test]
    fn small_n_uses_exact_expectation() {
        let r = concentration_experiment(2, 2000, 2, 20, 1, TrialRunner::default()).unwrap();
        assert_eq!(r.expectation_source, ExpectationSource::ExactRecurrence);
        assert_eq!(r.violations, 0);
        assert!((r.expectation - 1000.0).abs() < 5.0);
        let lambda = (8.0 * 2.0 * 2000.0 * 100f64.ln()).sqrt();
        assert!((r.azuma_lambda_at_1pct - lambda).abs() < 1e-9);
    }

    #[test]
    fn large_n_uses_sample_mean() {
        let r = concentration_experiment(2, 20_000, 3, 4, 1, TrialRunner::default()).unwrap();
        assert_eq!(r.expectation_source, ExpectationSource::SampleMean);
        assert_eq!(r.expectation, r.mean);
    }

    #[test]
    fn rejects_single_trial_and_low_degree() {
        assert!(concentration_experiment(2, 100, 2, 1, 0, TrialRunner::default()).is_err());
        assert!(concentration_experiment(3, 100, 2, 5, 0, TrialRunner::default()).is_err());
    }
}
