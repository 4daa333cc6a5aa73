//! Power-law tail exponent estimation.

use serde::Serialize;

use super::histogram::DegreeHistogram;
use crate::error::{Error, Result};

/// Minimum number of distinct tail degrees for a fit.
pub const MIN_DISTINCT_TAIL_DEGREES: usize = 10;

pub const DEFAULT_D_MIN: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FitMethod {
    /// Discrete maximum likelihood with the half-integer continuity correction.
    DiscreteMle,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExponentFit {
    pub gamma_hat: f64,
    pub d_min: usize,
    pub method: FitMethod,
    pub standard_error: f64,
    /// Number of observations at or above `d_min`.
    pub tail_count: u64,
    /// `1 - slope` of a least-squares line through the log-log complementary
    /// CDF of the tail; a cross-check only.
    pub ccdf_gamma: f64,
}

pub fn fit_tail_exponent(hist: &DegreeHistogram, d_min: usize) -> Result<ExponentFit> {
    fit_power_law(hist.counts.iter().map(|(&d, &c)| (d, c)), d_min)
}

/// Fits `p(d) ∝ d^(-gamma)` for `d >= d_min` to `(value, count)` pairs:
///
/// ```text
/// gamma_hat = 1 + m / sum_i ln(d_i / (d_min - 1/2))
/// ```
///
/// with standard error `(gamma_hat - 1) / sqrt(m)`.
pub fn fit_power_law(
    counts: impl IntoIterator<Item = (usize, u64)>,
    d_min: usize,
) -> Result<ExponentFit> {
    if d_min < 1 {
        return Err(Error::InvalidParams("d_min must be at least 1".into()));
    }
    let mut tail: Vec<(usize, u64)> = counts
        .into_iter()
        .filter(|&(d, c)| d >= d_min && c > 0)
        .collect();
    tail.sort_unstable();
    tail.dedup_by(|b, a| {
        if a.0 == b.0 {
            a.1 += b.1;
            true
        } else {
            false
        }
    });
    if tail.len() < MIN_DISTINCT_TAIL_DEGREES {
        return Err(Error::InsufficientTail {
            d_min,
            distinct: tail.len(),
            required: MIN_DISTINCT_TAIL_DEGREES,
        });
    }
    let m: u64 = tail.iter().map(|&(_, c)| c).sum();
    let shift = d_min as f64 - 0.5;
    let log_sum: f64 = tail
        .iter()
        .map(|&(d, c)| c as f64 * (d as f64 / shift).ln())
        .sum();
    let gamma_hat = 1.0 + m as f64 / log_sum;
    let standard_error = (gamma_hat - 1.0) / (m as f64).sqrt();

    // complementary CDF at each distinct tail degree
    let mut remaining = m;
    let points: Vec<(f64, f64)> = tail
        .iter()
        .map(|&(d, c)| {
            let p = (d as f64).ln();
            let q = (remaining as f64 / m as f64).ln();
            remaining -= c;
            (p, q)
        })
        .collect();
    let slope = least_squares_slope(&points);

    Ok(ExponentFit {
        gamma_hat,
        d_min,
        method: FitMethod::DiscreteMle,
        standard_error,
        tail_count: m,
        ccdf_gamma: 1.0 - slope,
    })
}

fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    let len = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / len;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / len;
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    sxy / sxx
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use rand_distr::{Distribution, Zeta};
    use std::collections::BTreeMap;

    fn zeta_counts(gamma: f64, samples: usize, seed: u64) -> BTreeMap<usize, u64> {
        let dist = Zeta::new(gamma).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut counts = BTreeMap::new();
        for _ in 0..samples {
            let x: f64 = dist.sample(&mut rng);
            *counts.entry(x as usize).or_insert(0) += 1;
        }
        counts
    }

    #[test]
    fn recovers_synthetic_exponents() {
        for gamma in [2.5, 3.0] {
            let counts = zeta_counts(gamma, 1_000_000, 17);
            let fit = fit_power_law(counts, DEFAULT_D_MIN).unwrap();
            assert!((fit.gamma_hat - gamma).abs() <= 0.15, "{gamma}: {fit:?}");
            assert!(fit.standard_error > 0.0);
        }
    }

    #[test]
    fn ccdf_cross_check_is_in_the_neighbourhood() {
        let fit = fit_power_law(zeta_counts(2.5, 1_000_000, 3), 10).unwrap();
        assert!((fit.ccdf_gamma - 2.5).abs() < 0.5, "{fit:?}");
    }

    #[test]
    fn insufficient_tail() {
        let hist = DegreeHistogram::from_degrees(2, [2, 3, 4, 5, 30, 31]);
        assert!(matches!(
            fit_tail_exponent(&hist, 10),
            Err(Error::InsufficientTail { distinct: 2, .. })
        ));
        let hist = DegreeHistogram::from_degrees(2, [2; 100]);
        assert!(matches!(
            fit_tail_exponent(&hist, 10),
            Err(Error::InsufficientTail { distinct: 0, .. })
        ));
    }

    #[test]
    fn estimate_exceeds_one() {
        let hist = DegreeHistogram::from_degrees(2, (10..40).chain(10..20));
        let fit = fit_tail_exponent(&hist, 10).unwrap();
        assert!(fit.gamma_hat > 1.0);
        assert_eq!(fit.tail_count, 40);
    }
}
