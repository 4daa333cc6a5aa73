//! Immutable undirected graph in compressed sparse row form.

use crate::error::{Error, Result};

/// Undirected simple graph on dense vertex ids `0..n`.
///
/// Every neighbor list is sorted ascending and each edge is stored twice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjacency {
    offsets: Vec<u64>,
    neighbors: Vec<u32>,
}

impl Adjacency {
    /// Takes ownership of prebuilt CSR arrays. Lists must already be sorted.
    pub(crate) fn from_csr(offsets: Vec<u64>, neighbors: Vec<u32>) -> Self {
        debug_assert_eq!(*offsets.last().unwrap_or(&0) as usize, neighbors.len());
        Self { offsets, neighbors }
    }

    /// Builds a graph from an undirected edge list. Self-loops and duplicate
    /// edges are rejected.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut degree = vec![0u64; n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidParams(format!("self-loop on vertex {u}")));
            }
            if u as usize >= n || v as usize >= n {
                return Err(Error::InvalidParams(format!(
                    "edge ({u}, {v}) out of range for n={n}"
                )));
            }
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0u64);
        let mut acc = 0u64;
        for d in &degree {
            acc += d;
            offsets.push(acc);
        }
        let mut cursor: Vec<u64> = offsets[..n].to_vec();
        let mut neighbors = vec![0u32; acc as usize];
        for &(u, v) in edges {
            neighbors[cursor[u as usize] as usize] = v;
            cursor[u as usize] += 1;
            neighbors[cursor[v as usize] as usize] = u;
            cursor[v as usize] += 1;
        }
        for v in 0..n {
            let list = &mut neighbors[offsets[v] as usize..offsets[v + 1] as usize];
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParams(format!(
                    "duplicate edge at vertex {v}"
                )));
            }
        }
        Ok(Self { offsets, neighbors })
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> u64 {
        self.neighbors.len() as u64 / 2
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        (self.offsets[v + 1] - self.offsets[v]) as usize
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[self.offsets[v] as usize..self.offsets[v + 1] as usize]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&(b as u32)).is_ok()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.offsets.windows(2).map(|w| (w[1] - w[0]) as usize)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.degrees().min()
    }

    /// Edges `(u, v)` with `u < v` in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| {
            let list = self.neighbors(u);
            let start = list.partition_point(|&w| (w as usize) <= u);
            list[start..].iter().map(move |&v| (u as u32, v))
        })
    }

    pub fn memory_bytes(&self) -> usize {
        self.offsets.len() * 8 + self.neighbors.len() * 4
    }
}
