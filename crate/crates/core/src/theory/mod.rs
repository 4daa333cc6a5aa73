//! Exact and limiting degree statistics of the k-tree process.

mod azuma;
mod beta;
mod coefficients;
mod expected;

pub use azuma::{azuma_bound, azuma_bound_conservative, azuma_lambda, azuma_lambda_conservative};
pub use beta::{
    beta_closed_form, beta_table, closed_form_without_half, default_d_max, tail_exponent,
    TheoreticalDistribution, DEFAULT_D_MAX_CAP,
};
pub use coefficients::{
    attachment_probability, cliques_containing, total_k_cliques, TheoryCoefficients,
};
pub use expected::{
    expected_histogram_dp, expected_histogram_dp_with_tolerance, ExpectedDegreeTable,
    DEFAULT_OVERFLOW_TOLERANCE,
};
