//! Exact expected degree counts `E[X_d(n)]` by forward recurrence.

use num_traits::ToPrimitive;

use super::coefficients::TheoryCoefficients;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Overflow mass allowed by default, as a fraction of `n`.
pub const DEFAULT_OVERFLOW_TOLERANCE: f64 = 1e-6;

/// `expected[i] = E[X_{k+i}(n)]` for degrees `k..=d_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpectedDegreeTable<T> {
    pub k: usize,
    pub n: usize,
    pub expected: Vec<T>,
    /// Expected number of vertices whose degree exceeds `d_max`.
    pub overflow: T,
}

impl<T: Scalar> ExpectedDegreeTable<T> {
    pub fn d_max(&self) -> usize {
        self.k + self.expected.len() - 1
    }

    /// `E[X_d(n)]`, zero for degrees outside `k..=d_max`.
    pub fn get(&self, d: usize) -> T {
        d.checked_sub(self.k)
            .and_then(|i| self.expected.get(i))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &T)> + '_ {
        self.expected
            .iter()
            .enumerate()
            .map(move |(i, y)| (self.k + i, y))
    }

    /// Sum of the table plus the overflow accumulator; equals `n`.
    pub fn total(&self) -> T {
        self.expected
            .iter()
            .cloned()
            .fold(self.overflow.clone(), |acc, y| acc + y)
    }
}

pub fn expected_histogram_dp<T: Scalar + ToPrimitive>(
    k: usize,
    n: usize,
    d_max: usize,
) -> Result<ExpectedDegreeTable<T>> {
    expected_histogram_dp_with_tolerance(k, n, d_max, DEFAULT_OVERFLOW_TOLERANCE)
}

/// Runs the expectation recurrences from the deterministic graph on `k+2`
/// vertices (`Y_k = 2`, `Y_{k+1} = k`) up to `n` vertices:
///
/// ```text
/// Y_k(m+1) = 1 + (1 - P(k, m)) Y_k(m)
/// Y_d(m+1) = P(d-1, m) Y_{d-1}(m) + (1 - P(d, m)) Y_d(m)      d > k
/// ```
///
/// where `P(d, m)` is the attachment probability. Mass leaving degree
/// `d_max` is collected in `overflow`; the call fails if it exceeds
/// `overflow_tolerance · n`.
pub fn expected_histogram_dp_with_tolerance<T: Scalar + ToPrimitive>(
    k: usize,
    n: usize,
    d_max: usize,
    overflow_tolerance: f64,
) -> Result<ExpectedDegreeTable<T>> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("k={k}, need k >= 2")));
    }
    if n < k + 2 {
        return Err(Error::InvalidParams(format!(
            "n={n}, need n >= k+2 = {}",
            k + 2
        )));
    }
    if d_max < k + 1 {
        return Err(Error::InvalidParams(format!(
            "d_max={d_max}, need d_max >= k+1 = {}",
            k + 1
        )));
    }
    let width = d_max - k + 1;
    let mut y = vec![T::zero(); width];
    y[0] = T::from_count(2);
    y[1] = T::from_count(k as u64);
    let mut overflow = T::zero();
    // highest index that may hold nonzero mass
    let mut top = 1usize;

    for m in k + 2..n {
        let coeffs = TheoryCoefficients::new(k, m)?;
        let inv_cliques = T::one() / (coeffs.clique_density::<T>() * T::from_count(m as u64));
        let prob = |i: usize| T::from_count(coeffs.numerator(k + i)) * inv_cliques.clone();

        if top == width - 1 {
            overflow = overflow + prob(top) * y[top].clone();
        } else if !y[top].is_zero() {
            top += 1;
        }
        // descending so y[i-1] is still the previous-step value
        let mut p_here = prob(top);
        for i in (1..=top).rev() {
            let p_below = prob(i - 1);
            let stay = (T::one() - p_here) * y[i].clone();
            let arrive = p_below.clone() * y[i - 1].clone();
            y[i] = arrive + stay;
            p_here = p_below;
        }
        y[0] = T::one() + (T::one() - p_here) * y[0].clone();
    }

    let overflow_f = overflow.to_f64().unwrap_or(f64::INFINITY);
    let tolerance = overflow_tolerance * n as f64;
    if overflow_f > tolerance {
        return Err(Error::DmaxTooSmall {
            d_max,
            overflow: overflow_f,
            tolerance,
        });
    }
    Ok(ExpectedDegreeTable {
        k,
        n,
        expected: y,
        overflow,
    })
}
