//! Scalar abstractions used by the theory module.
//!
//! Everything that only needs field arithmetic (recurrences, attachment
//! probabilities, the expected-degree dynamic program) is written against
//! [`Scalar`], so it runs on `f32`, `f64` and exact rationals alike.
//! Quantities that need transcendental functions (log-Gamma closed form,
//! concentration bounds) require [`Real`].

use std::fmt::Debug;

use num_traits::{Float, FromPrimitive, Num};

/// Field-like numeric type: `f32`, `f64`, `Ratio<i64>`, `Ratio<BigInt>`, ...
pub trait Scalar: Num + Clone + PartialOrd + FromPrimitive + Debug + Send + Sync + 'static {
    /// Lossless for every integer the theory module produces on exact types;
    /// rounds to nearest on floating-point types.
    fn from_count(x: u64) -> Self {
        Self::from_u64(x).expect("integer representable in scalar type")
    }

    fn from_ratio(num: u64, den: u64) -> Self {
        Self::from_count(num) / Self::from_count(den)
    }
}

impl<T> Scalar for T where
    T: Num + Clone + PartialOrd + FromPrimitive + Debug + Send + Sync + 'static
{
}

/// Floating-point scalar: `f32` or `f64`.
pub trait Real: Scalar + Float {
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Real for T where T: Scalar + Float {}
