use serde::Serialize;

use crate::generator::CliqueStore;
use crate::graph::Adjacency;

/// Outcome of the minimum-degree structure check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum StructureReport {
    Pass,
    /// The check needs at least `k + 2` vertices.
    NotApplicable {
        n: usize,
        k: usize,
    },
    BelowMinDegree {
        vertex: u32,
        degree: usize,
        k: usize,
    },
    /// A stored clique holds two vertices of degree exactly `k`.
    SharedMinDegree {
        clique: usize,
        vertices: (u32, u32),
    },
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        matches!(self, StructureReport::Pass)
    }
}

/// Every vertex has degree at least `k`, and no stored k-clique contains two
/// vertices of degree exactly `k`. Reports the first counterexample.
pub fn verify_min_degree_structure(graph: &Adjacency, cliques: &CliqueStore) -> StructureReport {
    let k = cliques.k();
    let n = graph.vertex_count();
    if n < k + 2 {
        return StructureReport::NotApplicable { n, k };
    }
    if let Some((v, d)) = graph.degrees().enumerate().find(|&(_, d)| d < k) {
        return StructureReport::BelowMinDegree {
            vertex: v as u32,
            degree: d,
            k,
        };
    }
    for (index, clique) in cliques.iter().enumerate() {
        let mut minimal = clique.iter().filter(|&&v| graph.degree(v as usize) == k);
        if let (Some(&a), Some(&b)) = (minimal.next(), minimal.next()) {
            return StructureReport::SharedMinDegree {
                clique: index,
                vertices: (a, b),
            };
        }
    }
    StructureReport::Pass
}
