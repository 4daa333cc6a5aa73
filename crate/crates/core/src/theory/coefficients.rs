use serde::Serialize;

use crate::error::{Error, Result};
use crate::generator::validate_k_n;
use crate::scalar::Scalar;

/// Number of k-cliques after `n` vertices: `(n-k-1)k + (k+1)`.
pub fn total_k_cliques(k: usize, n: usize) -> Result<u64> {
    validate_k_n(k, n)?;
    let (k, n) = (k as u64, n as u64);
    Ok((n - k - 1) * k + (k + 1))
}

/// Number of stored k-cliques containing a vertex of degree `d`: `k + (k-1)(d-k)`.
///
/// A vertex enters with `k` cliques and gains `k-1` more each time it is
/// chosen as part of an attachment clique.
pub fn cliques_containing(k: usize, d: usize) -> Result<u64> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("k={k}, need k >= 2")));
    }
    if d < k {
        return Err(Error::DegreeBelowK { k, d });
    }
    let (k, d) = (k as u64, d as u64);
    Ok(k + (k - 1) * (d - k))
}

/// Coefficients of the attachment probability `(slope d - offset) / (clique_density n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TheoryCoefficients {
    pub k: usize,
    pub n: usize,
    /// `k - 1`
    pub slope: u64,
    /// `k(k - 2)`
    pub offset: u64,
}

impl TheoryCoefficients {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        validate_k_n(k, n)?;
        let k64 = k as u64;
        Ok(Self {
            k,
            n,
            slope: k64 - 1,
            offset: k64 * (k64 - 2),
        })
    }

    /// `clique_density = k - (k^2 - 1)/n`. Exact for rational `T`.
    pub fn clique_density<T: Scalar>(&self) -> T {
        let k = self.k as u64;
        T::from_count(k) - T::from_ratio(k * k - 1, self.n as u64)
    }

    /// `slope d - offset`, the numerator for a vertex of degree `d >= k`.
    pub fn numerator(&self, d: usize) -> u64 {
        self.slope * d as u64 - self.offset
    }
}

/// Probability that a vertex of degree `d` in the `n`-vertex graph is joined
/// to the next vertex.
pub fn attachment_probability<T: Scalar>(k: usize, d: usize, n: usize) -> Result<T> {
    let coeffs = TheoryCoefficients::new(k, n)?;
    if d < k {
        return Err(Error::DegreeBelowK { k, d });
    }
    let denominator = coeffs.clique_density::<T>() * T::from_count(n as u64);
    Ok(T::from_count(coeffs.numerator(d)) / denominator)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::Ratio;

    type Exact = Ratio<BigInt>;

    fn exact(num: i64, den: i64) -> Exact {
        Ratio::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn clique_totals() {
        assert_eq!(total_k_cliques(2, 4).unwrap(), 5);
        assert_eq!(total_k_cliques(3, 10).unwrap(), 22);
        for k in 2..10 {
            assert_eq!(total_k_cliques(k, k + 1).unwrap(), k as u64 + 1);
        }
        assert!(total_k_cliques(1, 5).is_err());
        assert!(total_k_cliques(3, 3).is_err());
    }

    #[test]
    fn cliques_per_vertex() {
        assert_eq!(cliques_containing(2, 2).unwrap(), 2);
        assert_eq!(cliques_containing(3, 5).unwrap(), 7);
        assert!(matches!(
            cliques_containing(3, 2),
            Err(Error::DegreeBelowK { k: 3, d: 2 })
        ));
    }

    #[test]
    fn coefficient_values() {
        let c = TheoryCoefficients::new(4, 10).unwrap();
        assert_eq!((c.slope, c.offset), (3, 8));
        assert_eq!(c.clique_density::<Exact>(), exact(4, 1) - exact(15, 10));
    }

    #[test]
    fn clique_density_times_n_is_clique_count() {
        for k in 2..8 {
            for n in k + 1..40 {
                let c = TheoryCoefficients::new(k, n).unwrap();
                let lhs = c.clique_density::<Exact>() * exact(n as i64, 1);
                assert_eq!(lhs, exact(total_k_cliques(k, n).unwrap() as i64, 1));
                assert!(c.clique_density::<f64>() > 0.0);
            }
        }
    }

    #[test]
    fn probability_examples() {
        let p: f64 = attachment_probability(2, 2, 10).unwrap();
        assert!((p - 2.0 / 17.0).abs() < 1e-15);
        for k in 2..10 {
            let p: Exact = attachment_probability(k, k, k + 1).unwrap();
            assert_eq!(p, exact(k as i64, k as i64 + 1));
        }
        assert!(attachment_probability::<f64>(3, 2, 10).is_err());
    }

    #[test]
    fn probability_is_ratio_of_counts_exactly() {
        for k in 2..7 {
            for n in k + 1..30 {
                let total = total_k_cliques(k, n).unwrap() as i64;
                for d in k..n {
                    let p: Exact = attachment_probability(k, d, n).unwrap();
                    let count = cliques_containing(k, d).unwrap() as i64;
                    assert_eq!(p * exact(total, 1), exact(count, 1));
                }
            }
        }
    }

    #[test]
    fn probability_affine_increasing_in_d() {
        let n = 100;
        let ps: Vec<f64> = (3..50)
            .map(|d| attachment_probability(3, d, n).unwrap())
            .collect();
        let steps: Vec<f64> = ps.windows(2).map(|w| w[1] - w[0]).collect();
        assert!(steps.iter().all(|&s| s > 0.0));
        assert!(steps.iter().all(|&s| (s - steps[0]).abs() < 1e-15));
    }
}
