//! Measurements on generated graphs and their comparison with theory.

mod cliques;
mod concentration;
mod decomposition;
mod deviation;
mod experiment;
mod fit;
mod histogram;
mod structure;

pub use cliques::{
    brute_force_k_cliques, brute_force_k_cliques_with_limit, clique_store_as_set,
    DEFAULT_BRUTE_FORCE_LIMIT,
};
pub use concentration::{
    concentration_experiment, concentration_experiment_with_seeds, ConcentrationReport,
    ExpectationSource, AZUMA_LEVEL, EXACT_EXPECTATION_MAX_N,
};
pub use decomposition::{validate_tree_decomposition, DecompositionCheck};
pub use deviation::{deviation_report, DeviationReport, DeviationRow};
pub use experiment::{trial_seeds, TrialRunner};
pub use fit::{
    fit_power_law, fit_tail_exponent, ExponentFit, FitMethod, DEFAULT_D_MIN,
    MIN_DISTINCT_TAIL_DEGREES,
};
pub use histogram::{degree_histogram, DegreeHistogram};
pub use structure::{verify_min_degree_structure, StructureReport};
