use serde::Serialize;

use crate::generator::TreeDecomposition;
use crate::graph::Adjacency;

/// Result of checking a tree decomposition against its graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionCheck {
    /// The bag graph is a single tree.
    pub is_tree: bool,
    /// First graph edge not contained in any bag.
    pub uncovered_edge: Option<(u32, u32)>,
    /// First vertex whose bags do not induce a connected subtree, or that
    /// appears in no bag at all.
    pub disconnected_vertex: Option<u32>,
    pub width: usize,
}

impl DecompositionCheck {
    pub fn is_valid(&self) -> bool {
        self.is_tree && self.uncovered_edge.is_none() && self.disconnected_vertex.is_none()
    }

    pub fn is_valid_with_width(&self, width: usize) -> bool {
        self.is_valid() && self.width == width
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn is_tree(bags: usize, edges: &[(usize, usize)]) -> bool {
    if bags == 0 || edges.len() != bags - 1 {
        return false;
    }
    let mut parent: Vec<usize> = (0..bags).collect();
    for &(a, b) in edges {
        if a >= bags || b >= bags {
            return false;
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

fn sorted_intersection<'a>(a: &'a [u32], b: &'a [u32]) -> impl Iterator<Item = u32> + 'a {
    let (mut i, mut j) = (0, 0);
    std::iter::from_fn(move || {
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                    return Some(a[i - 1]);
                }
            }
        }
        None
    })
}

/// Checks edge coverage, running intersection and tree shape.
///
/// In a tree, the bags holding `v` form a connected subtree exactly when
/// the tree edges with `v` in both end bags number one less than those bags.
pub fn validate_tree_decomposition(
    td: &TreeDecomposition,
    graph: &Adjacency,
) -> DecompositionCheck {
    let n = graph.vertex_count();
    let tree = is_tree(td.bag_count(), td.tree_edges());

    let mut bags_with = vec![0u64; n];
    let mut pairs: Vec<u64> = Vec::new();
    let mut out_of_range = None;
    for bag in td.bags() {
        for (i, &u) in bag.iter().enumerate() {
            if u as usize >= n {
                out_of_range.get_or_insert(u);
                continue;
            }
            bags_with[u as usize] += 1;
            for &v in &bag[i + 1..] {
                pairs.push((u64::from(u) << 32) | u64::from(v));
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    let uncovered_edge = graph.edges().find(|&(u, v)| {
        pairs
            .binary_search(&((u64::from(u) << 32) | u64::from(v)))
            .is_err()
    });

    let mut edges_with = vec![0u64; n];
    if tree {
        for &(a, b) in td.tree_edges() {
            for v in sorted_intersection(td.bag(a), td.bag(b)) {
                if (v as usize) < n {
                    edges_with[v as usize] += 1;
                }
            }
        }
    }
    let disconnected_vertex = out_of_range.or_else(|| {
        (0..n)
            .find(|&v| bags_with[v] == 0 || (tree && edges_with[v] + 1 != bags_with[v]))
            .map(|v| v as u32)
    });

    DecompositionCheck {
        is_tree: tree,
        uncovered_edge,
        disconnected_vertex,
        width: td.width(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::{build_tree_decomposition, generate, ProcessParams};

    fn path4() -> Adjacency {
        Adjacency::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn generated_decompositions_validate() {
        for k in 2..6 {
            for seed in 0..5 {
                let tree = generate(ProcessParams::new(k, 150, seed).unwrap()).unwrap();
                let td = build_tree_decomposition(&tree).unwrap();
                let check = validate_tree_decomposition(&td, tree.adjacency());
                assert!(check.is_valid_with_width(k), "{check:?}");
            }
        }
    }

    #[test]
    fn valid_path_decomposition() {
        let td = TreeDecomposition::new(
            vec![vec![0, 1], vec![1, 2], vec![2, 3]],
            vec![(0, 1), (1, 2)],
        );
        let check = validate_tree_decomposition(&td, &path4());
        assert!(check.is_valid_with_width(1));
    }

    #[test]
    fn uncovered_edge() {
        let td = TreeDecomposition::new(
            vec![vec![0, 1], vec![2, 3], vec![1, 3]],
            vec![(0, 2), (2, 1)],
        );
        let check = validate_tree_decomposition(&td, &path4());
        assert_eq!(check.uncovered_edge, Some((1, 2)));
    }

    #[test]
    fn broken_running_intersection() {
        // vertex 1 in bags 0 and 2 but not in bag 1 between them
        let td = TreeDecomposition::new(
            vec![vec![0, 1], vec![2, 3], vec![1, 2]],
            vec![(0, 1), (1, 2)],
        );
        let check = validate_tree_decomposition(&td, &path4());
        assert!(check.is_tree);
        assert_eq!(check.uncovered_edge, None);
        assert_eq!(check.disconnected_vertex, Some(1));
    }

    #[test]
    fn not_a_tree() {
        let bags = vec![vec![0, 1], vec![1, 2], vec![2, 3]];
        let cyclic = TreeDecomposition::new(bags.clone(), vec![(0, 1), (1, 2), (2, 0)]);
        assert!(!validate_tree_decomposition(&cyclic, &path4()).is_tree);
        let forest = TreeDecomposition::new(bags, vec![(0, 1)]);
        assert!(!validate_tree_decomposition(&forest, &path4()).is_valid());
    }

    #[test]
    fn missing_vertex() {
        let g = Adjacency::from_edges(5, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let td = TreeDecomposition::new(
            vec![vec![0, 1], vec![1, 2], vec![2, 3]],
            vec![(0, 1), (1, 2)],
        );
        assert_eq!(
            validate_tree_decomposition(&td, &g).disconnected_vertex,
            Some(4)
        );
    }
}
