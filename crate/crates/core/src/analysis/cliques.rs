use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::generator::CliqueStore;
use crate::graph::Adjacency;

pub const DEFAULT_BRUTE_FORCE_LIMIT: usize = 30;

/// Every k-subset of the vertex set that induces a complete subgraph, each
/// as a sorted id list.
pub fn brute_force_k_cliques(graph: &Adjacency, k: usize) -> Result<BTreeSet<Vec<u32>>> {
    brute_force_k_cliques_with_limit(graph, k, DEFAULT_BRUTE_FORCE_LIMIT)
}

pub fn brute_force_k_cliques_with_limit(
    graph: &Adjacency,
    k: usize,
    limit: usize,
) -> Result<BTreeSet<Vec<u32>>> {
    let n = graph.vertex_count();
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    Ok((0..n as u32)
        .combinations(k)
        .filter(|set| {
            set.iter()
                .tuple_combinations()
                .all(|(&u, &v)| graph.has_edge(u as usize, v as usize))
        })
        .collect())
}

/// The store as a set of sorted id lists, for comparison with the brute force.
pub fn clique_store_as_set(store: &CliqueStore) -> BTreeSet<Vec<u32>> {
    store
        .iter()
        .map(|c| {
            let mut c = c.to_vec();
            c.sort_unstable();
            c
        })
        .collect()
}
