use super::process::KTree;
use crate::error::{Error, Result};

/// Tree decomposition: vertex bags linked into a tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    offsets: Vec<usize>,
    vertices: Vec<u32>,
    tree_edges: Vec<(usize, usize)>,
    width: usize,
}

impl TreeDecomposition {
    /// Bags are sorted on construction; `width` is the largest bag size minus one.
    pub fn new(bags: Vec<Vec<u32>>, tree_edges: Vec<(usize, usize)>) -> Self {
        let mut offsets = Vec::with_capacity(bags.len() + 1);
        offsets.push(0);
        let mut vertices = Vec::with_capacity(bags.iter().map(Vec::len).sum());
        for mut bag in bags {
            bag.sort_unstable();
            bag.dedup();
            vertices.extend_from_slice(&bag);
            offsets.push(vertices.len());
        }
        let width = offsets
            .windows(2)
            .map(|w| w[1] - w[0])
            .max()
            .unwrap_or(0)
            .saturating_sub(1);
        Self {
            offsets,
            vertices,
            tree_edges,
            width,
        }
    }

    pub fn bag_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn bag(&self, i: usize) -> &[u32] {
        &self.vertices[self.offsets[i]..self.offsets[i + 1]]
    }

    pub fn bags(&self) -> impl ExactSizeIterator<Item = &[u32]> + '_ {
        (0..self.bag_count()).map(move |i| self.bag(i))
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags().map(<[u32]>::len).max().unwrap_or(0)
    }
}

/// Width-`k` decomposition read off the construction history.
///
/// Bag 0 is the initial `(k+1)`-clique. Vertex `v >= k+1` gets bag `v - k`,
/// holding `v` and its attachment clique, linked to the bag whose vertex
/// created that clique (bag 0 for cliques of the initial clique).
pub fn build_tree_decomposition(tree: &KTree) -> Result<TreeDecomposition> {
    let k = tree.k();
    let n = tree.vertex_count();
    let added = n - k - 1;
    if tree.attachment().len() != added {
        return Err(Error::MissingHistory(format!(
            "{} attachment records for {added} added vertices",
            tree.attachment().len()
        )));
    }
    if tree.cliques().len() != k * added + k + 1 {
        return Err(Error::MissingHistory(format!(
            "clique store holds {} cliques, expected {}",
            tree.cliques().len(),
            k * added + k + 1
        )));
    }
    let mut bags = Vec::with_capacity(added + 1);
    bags.push((0..=k as u32).collect::<Vec<_>>());
    let mut tree_edges = Vec::with_capacity(added);
    for (offset, &clique) in tree.attachment().iter().enumerate() {
        let v = (k + 1 + offset) as u32;
        let clique = clique as usize;
        let mut bag = tree.cliques().get(clique).to_vec();
        bag.push(v);
        bags.push(bag);
        let parent = if clique <= k {
            0
        } else {
            (clique - k - 1) / k + 1
        };
        tree_edges.push((parent, offset + 1));
    }
    Ok(TreeDecomposition::new(bags, tree_edges))
}
