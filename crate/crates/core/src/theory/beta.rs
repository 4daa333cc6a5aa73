use statrs::function::gamma::ln_gamma;

use super::coefficients::TheoryCoefficients;
use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};

/// Upper end of the default degree range for expected-count tables.
pub const DEFAULT_D_MAX_CAP: usize = 100_000;

/// Limiting degree distribution `beta_d` for `d = k..=d_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct TheoreticalDistribution<T> {
    pub k: usize,
    /// `beta[i]` is the limiting fraction of vertices of degree `k + i`.
    pub beta: Vec<T>,
    /// Tail exponent `1 + k/(k-1)`.
    pub gamma: T,
}

impl<T: Scalar> TheoreticalDistribution<T> {
    pub fn d_max(&self) -> usize {
        self.k + self.beta.len() - 1
    }

    pub fn get(&self, d: usize) -> Option<&T> {
        d.checked_sub(self.k).and_then(|i| self.beta.get(i))
    }

    /// `(d, beta_d)` pairs in increasing degree.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &T)> + '_ {
        self.beta
            .iter()
            .enumerate()
            .map(move |(i, b)| (self.k + i, b))
    }

    /// `beta_d` for any `d >= k`, extending the recurrence past the table.
    pub fn value_at(&self, d: usize) -> T {
        if let Some(b) = self.get(d) {
            return b.clone();
        }
        let coeffs = coefficients(self.k);
        let mut b = self.beta.last().expect("table is never empty").clone();
        for e in self.d_max() + 1..=d {
            b = b * recurrence_factor::<T>(&coeffs, e);
        }
        b
    }

    /// `sum_{d >= from} beta_d`, evaluated in closed form as
    /// `beta_from (slope from - offset + k) / k`.
    ///
    /// The recurrence makes `beta_d` a ratio of Gamma functions whose sums
    /// telescope, so the tail is exact rather than an extrapolation.
    pub fn tail_mass(&self, from: usize) -> T {
        let from = from.max(self.k);
        let coeffs = coefficients(self.k);
        let w = coeffs.numerator(from) + self.k as u64;
        self.value_at(from) * T::from_ratio(w, self.k as u64)
    }

    /// `sum_{d >= from} d beta_d`, in closed form as
    /// `beta_from w (u k + offset) / (slope k)` with `u = slope from - offset`, `w = u + k`.
    pub fn tail_first_moment(&self, from: usize) -> T {
        let from = from.max(self.k);
        let coeffs = coefficients(self.k);
        let k = self.k as u64;
        let u = coeffs.numerator(from);
        let w = u + k;
        self.value_at(from)
            * T::from_count(w)
            * T::from_ratio(u * k + coeffs.offset, coeffs.slope * k)
    }

    /// Table sum plus the exact tail beyond `d_max`; equals one.
    pub fn total_mass(&self) -> T {
        self.partial_sum() + self.tail_mass(self.d_max() + 1)
    }

    /// Table first moment plus the exact tail beyond `d_max`; equals `2k`.
    pub fn mean_degree(&self) -> T {
        self.partial_first_moment() + self.tail_first_moment(self.d_max() + 1)
    }

    pub fn partial_sum(&self) -> T {
        self.beta.iter().cloned().fold(T::zero(), |acc, b| acc + b)
    }

    pub fn partial_first_moment(&self) -> T {
        self.iter().fold(T::zero(), |acc, (d, b)| {
            acc + T::from_count(d as u64) * b.clone()
        })
    }
}

fn coefficients(k: usize) -> TheoryCoefficients {
    // n only enters clique_density, which the limiting recurrence does not use
    TheoryCoefficients::new(k, k + 1).expect("k validated by caller")
}

/// `beta_d / beta_{d-1} = (slope (d-1) - offset) / (slope d - offset + k)`.
fn recurrence_factor<T: Scalar>(coeffs: &TheoryCoefficients, d: usize) -> T {
    let num = coeffs.numerator(d - 1);
    let den = coeffs.numerator(d) + coeffs.k as u64;
    T::from_ratio(num, den)
}

/// `beta_k = 1/2`, then the first-order recurrence up to `d_max`.
pub fn beta_table<T: Scalar>(k: usize, d_max: usize) -> Result<TheoreticalDistribution<T>> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("k={k}, need k >= 2")));
    }
    if d_max < k {
        return Err(Error::DegreeBelowK { k, d: d_max });
    }
    let coeffs = coefficients(k);
    let mut beta = Vec::with_capacity(d_max - k + 1);
    let mut current = T::from_ratio(1, 2);
    beta.push(current.clone());
    for d in k + 1..=d_max {
        current = current * recurrence_factor::<T>(&coeffs, d);
        beta.push(current.clone());
    }
    Ok(TheoreticalDistribution {
        k,
        beta,
        gamma: tail_exponent(k)?,
    })
}

/// `1 + k/(k-1)`.
pub fn tail_exponent<T: Scalar>(k: usize) -> Result<T> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("k={k}, need k >= 2")));
    }
    Ok(T::one() + T::from_ratio(k as u64, k as u64 - 1))
}

/// `ln[ Γ(3 + 2/(k-1)) Γ(d - offset/slope) / (Γ(1 + 1/(k-1)) Γ(d - offset/slope + k/slope + 1)) ]`
fn ln_gamma_ratio_product(k: usize, d: usize) -> Result<f64> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("k={k}, need k >= 2")));
    }
    if d < k {
        return Err(Error::DegreeBelowK { k, d });
    }
    let kf = k as f64;
    let a = kf - 1.0;
    let shift = kf * (kf - 2.0) / a;
    let x = d as f64 - shift;
    Ok(
        ln_gamma(3.0 + 2.0 / a) - ln_gamma(1.0 + 1.0 / a) + ln_gamma(x)
            - ln_gamma(x + kf / a + 1.0),
    )
}

/// `beta_d` through the Gamma-function product, evaluated in log space.
///
/// Carries a leading factor 1/2: the bare Gamma product equals `2 beta_d`
/// (see [`closed_form_without_half`]).
pub fn beta_closed_form<T: Real>(k: usize, d: usize) -> Result<T> {
    let v = 0.5 * ln_gamma_ratio_product(k, d)?.exp();
    Ok(T::from_f64(v).expect("finite"))
}

/// The bare Gamma product `Γ(3+2/(k-1))/Γ(1+1/(k-1)) · Γ(d-b/a)/Γ(d-b/a+k/a+1)`
/// without the factor 1/2. It sums to 2 over `d >= k`, so it is not a
/// distribution; kept to document the discrepancy.
pub fn closed_form_without_half<T: Real>(k: usize, d: usize) -> Result<T> {
    Ok(T::from_f64(ln_gamma_ratio_product(k, d)?.exp()).expect("finite"))
}

/// Smallest `d` with `beta_d n < 1e-4`, capped at [`DEFAULT_D_MAX_CAP`] and
/// at least `k + 1`.
pub fn default_d_max(k: usize, n: usize) -> usize {
    let coeffs = coefficients(k.max(2));
    let threshold = 1e-4 / n.max(1) as f64;
    let mut b = 0.5f64;
    let mut d = k;
    while b >= threshold && d < DEFAULT_D_MAX_CAP {
        d += 1;
        b *= recurrence_factor::<f64>(&coeffs, d);
    }
    d.max(k + 1)
}
