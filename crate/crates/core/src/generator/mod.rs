//! The k-tree process: start from a `(k+1)`-clique and repeatedly join a new
//! vertex to every vertex of a uniformly chosen k-clique.

mod decomposition;
mod params;
mod partial;
mod process;

pub use decomposition::{build_tree_decomposition, TreeDecomposition};
pub use params::ProcessParams;
pub use partial::{
    generate_partial, partial_from_tree, retained_out_degree, thin, PartialKTree, DELETION_STREAM,
};
pub use process::{
    generate, generate_with_budget, generate_with_rng, CliqueStore, KTree, KTreeProcess,
    DEFAULT_MEMORY_BUDGET,
};

pub(crate) use params::validate_k_n;
