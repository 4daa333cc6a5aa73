//! Martingale tail bounds for the degree counts `X_d(n)`.
//!
//! The published bound uses `8kn` in the exponent. Martingale differences of
//! at most `2k` over about `n` steps give `8k^2 n` through Azuma's inequality;
//! both are exposed, and the `8kn` form is the default.

use crate::error::{Error, Result};
use crate::generator::validate_k_n;
use crate::scalar::Real;

fn check<T: Real>(k: usize, n: usize, lambda: T) -> Result<()> {
    validate_k_n(k, n)?;
    if lambda.is_nan() || lambda < T::zero() {
        return Err(Error::InvalidParams(format!(
            "lambda={lambda:?}, need lambda >= 0"
        )));
    }
    Ok(())
}

/// `exp(-lambda^2 / (8 k n))`.
pub fn azuma_bound<T: Real>(k: usize, n: usize, lambda: T) -> Result<T> {
    check(k, n, lambda)?;
    let scale = T::from_count(8 * k as u64) * T::from_count(n as u64);
    Ok((-(lambda * lambda) / scale).exp())
}

/// `exp(-lambda^2 / (8 k^2 n))`.
pub fn azuma_bound_conservative<T: Real>(k: usize, n: usize, lambda: T) -> Result<T> {
    check(k, n, lambda)?;
    let scale = T::from_count(8 * (k * k) as u64) * T::from_count(n as u64);
    Ok((-(lambda * lambda) / scale).exp())
}

/// Deviation `lambda` at which [`azuma_bound`] equals `level`: `sqrt(8 k n ln(1/level))`.
pub fn azuma_lambda<T: Real>(k: usize, n: usize, level: T) -> Result<T> {
    lambda_for(k, n, level, k as u64)
}

/// Deviation at which [`azuma_bound_conservative`] equals `level`.
pub fn azuma_lambda_conservative<T: Real>(k: usize, n: usize, level: T) -> Result<T> {
    lambda_for(k, n, level, (k * k) as u64)
}

fn lambda_for<T: Real>(k: usize, n: usize, level: T, factor: u64) -> Result<T> {
    validate_k_n(k, n)?;
    if !(level > T::zero() && level <= T::one()) {
        return Err(Error::InvalidParams(format!(
            "level={level:?}, need 0 < level <= 1"
        )));
    }
    let scale = T::from_count(8 * factor) * T::from_count(n as u64);
    Ok((scale * -level.ln()).sqrt())
}
