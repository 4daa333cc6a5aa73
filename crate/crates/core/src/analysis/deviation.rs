use serde::Serialize;

use super::histogram::DegreeHistogram;
use crate::error::{Error, Result};
use crate::theory::TheoreticalDistribution;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DeviationRow {
    pub d: usize,
    pub empirical_fraction: f64,
    pub beta: f64,
    pub abs_error: f64,
    pub rel_error: f64,
}

/// Empirical degree fractions against the limiting distribution.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DeviationReport {
    pub k: usize,
    pub n: usize,
    pub trials: u64,
    pub d_cut: usize,
    pub rows: Vec<DeviationRow>,
    /// Largest `abs_error` over `d <= d_cut`.
    pub max_abs_error: f64,
    /// Half the L1 distance over `k..=d_cut`, with everything above `d_cut`
    /// lumped into one tail cell on both sides.
    pub total_variation_distance: f64,
}

pub fn deviation_report(
    hist: &DegreeHistogram,
    theory: &TheoreticalDistribution<f64>,
    d_cut: usize,
) -> Result<DeviationReport> {
    if hist.k != theory.k {
        return Err(Error::KMismatch {
            histogram: hist.k,
            theory: theory.k,
        });
    }
    if d_cut < hist.k {
        return Err(Error::DegreeBelowK {
            k: hist.k,
            d: d_cut,
        });
    }
    let mut rows = Vec::with_capacity(d_cut - hist.k + 1);
    let mut empirical_mass = 0.0;
    let mut l1 = 0.0;
    for d in hist.k..=d_cut {
        let empirical_fraction = hist.fraction(d);
        let beta = theory.value_at(d);
        let abs_error = (empirical_fraction - beta).abs();
        empirical_mass += empirical_fraction;
        l1 += abs_error;
        rows.push(DeviationRow {
            d,
            empirical_fraction,
            beta,
            abs_error,
            rel_error: abs_error / beta,
        });
    }
    let empirical_tail = (1.0 - empirical_mass).max(0.0);
    l1 += (empirical_tail - theory.tail_mass(d_cut + 1)).abs();
    let max_abs_error = rows.iter().map(|r| r.abs_error).fold(0.0, f64::max);
    Ok(DeviationReport {
        k: hist.k,
        n: hist.n,
        trials: hist.trials,
        d_cut,
        rows,
        max_abs_error,
        total_variation_distance: 0.5 * l1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theory::beta_table;
    use std::collections::BTreeMap;

    #[test]
    fn self_comparison_error_below_one_over_n() {
        let n = 100_000usize;
        let theory = beta_table::<f64>(2, 400).unwrap();
        let counts: BTreeMap<usize, u64> = theory
            .iter()
            .map(|(d, b)| (d, (b * n as f64).round() as u64))
            .collect();
        let hist = DegreeHistogram {
            k: 2,
            n,
            trials: 1,
            counts,
        };
        let report = deviation_report(&hist, &theory, 50).unwrap();
        assert!(report.max_abs_error <= 1.0 / n as f64);
        assert_eq!(report.rows.len(), 49);
        for r in &report.rows {
            assert_eq!(r.abs_error, (r.empirical_fraction - r.beta).abs());
        }
    }

    #[test]
    fn k_mismatch() {
        let theory = beta_table::<f64>(3, 10).unwrap();
        let hist = DegreeHistogram::from_degrees(2, [2, 2, 3]);
        assert!(matches!(
            deviation_report(&hist, &theory, 5),
            Err(Error::KMismatch {
                histogram: 2,
                theory: 3
            })
        ));
    }

    #[test]
    fn tvd_of_point_mass() {
        // everything at degree k: TVD = 1 - beta_k = 1/2
        let theory = beta_table::<f64>(2, 10).unwrap();
        let hist = DegreeHistogram::from_degrees(2, [2; 10]);
        let report = deviation_report(&hist, &theory, 20).unwrap();
        assert!((report.total_variation_distance - 0.5).abs() < 1e-12);
    }
}
