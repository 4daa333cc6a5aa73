//! Random k-trees: the k-tree process, its degree distribution and the tools
//! to check one against the other.
//!
//! - [`generator`] grows random k-trees, partial k-trees and their width-k
//!   tree decompositions.
//! - [`theory`] holds the attachment probabilities, the limiting degree
//!   distribution, exact expected degree counts and concentration bounds.
//!   It is generic over [`Scalar`], so the same code runs on `f64` and on
//!   exact rationals.
//! - [`analysis`] measures generated graphs: histograms, brute-force clique
//!   enumeration, structural checks, exponent fits and multi-trial
//!   experiments.
//! - [`io`] reads and writes edge lists, PACE `.td` files and CSV/JSON tables.

pub mod analysis;
pub mod error;
pub mod generator;
pub mod graph;
pub mod io;
pub mod rng;
pub mod scalar;
pub mod theory;

pub use error::{Error, Result};
pub use graph::Adjacency;
pub use scalar::{Real, Scalar};

use num_bigint::BigInt;
use num_rational::Ratio;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exact rational scalar.
pub type Exact = Ratio<BigInt>;

pub type TheoreticalDistributionF64 = theory::TheoreticalDistribution<f64>;
pub type TheoreticalDistributionF32 = theory::TheoreticalDistribution<f32>;
pub type ExactDistribution = theory::TheoreticalDistribution<Exact>;

pub type ExpectedDegreeTableF64 = theory::ExpectedDegreeTable<f64>;
pub type ExpectedDegreeTableF32 = theory::ExpectedDegreeTable<f32>;
pub type ExactExpectedDegreeTable = theory::ExpectedDegreeTable<Exact>;
