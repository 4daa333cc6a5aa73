//! Random partial k-trees by deleting attachment edges.
//!
//! This construction carries no known degree law; it is here to be measured.

use rand::seq::index;
use rand::{RngCore, SeedableRng};

use super::params::ProcessParams;
use super::process::{generate, KTree};
use crate::error::{Error, Result};
use crate::graph::Adjacency;
use crate::rng::ProcessRng;

/// Stream of the per-seed ChaCha generator used for deletion choices. The
/// k-tree itself is drawn from stream 0.
pub const DELETION_STREAM: u64 = 1;

/// A subgraph of a random k-tree where every vertex added after the initial
/// clique keeps `retained` of its `k` attachment edges.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialKTree {
    pub params: ProcessParams,
    pub b: f64,
    pub retained: usize,
    pub adjacency: Adjacency,
}

/// Number of attachment edges each vertex keeps: `b·k` rounded half up.
pub fn retained_out_degree(k: usize, b: f64) -> Result<usize> {
    if !(b.is_finite() && b > 0.0 && b <= 1.0) {
        return Err(Error::InvalidB {
            b,
            reason: "need 0 < b <= 1".into(),
        });
    }
    let retained = (b * k as f64 + 0.5).floor() as usize;
    if retained == 0 {
        return Err(Error::InvalidB {
            b,
            reason: format!("round(b*k) = 0 for k={k}"),
        });
    }
    Ok(retained.min(k))
}

/// Generates a k-tree from `params` and thins it with the deletion stream of
/// the same seed. With `b = 1` the result equals the plain k-tree.
pub fn generate_partial(params: ProcessParams, b: f64) -> Result<PartialKTree> {
    retained_out_degree(params.k, b)?;
    partial_from_tree(&generate(params)?, b)
}

/// Thins an already generated tree exactly as [`generate_partial`] would.
pub fn partial_from_tree(tree: &KTree, b: f64) -> Result<PartialKTree> {
    let mut rng = ProcessRng::seed_from_u64(tree.params().seed);
    rng.set_stream(DELETION_STREAM);
    thin(tree, b, &mut rng)
}

/// Deletes, for each vertex `v >= k+1` independently, a uniformly chosen set
/// of `k - round(b·k)` of the edges joining `v` to its attachment clique.
/// Edges a vertex later receives from its own children are never touched.
pub fn thin<R: RngCore + ?Sized>(tree: &KTree, b: f64, rng: &mut R) -> Result<PartialKTree> {
    let k = tree.k();
    let n = tree.vertex_count();
    let retained = retained_out_degree(k, b)?;
    if tree.attachment().len() != n - k - 1 {
        return Err(Error::MissingHistory(format!(
            "{} attachment records for {} added vertices",
            tree.attachment().len(),
            n - k - 1
        )));
    }
    let mut edges = Vec::with_capacity(k * (k + 1) / 2 + retained * (n - k - 1));
    for u in 0..=k as u32 {
        for v in u + 1..=k as u32 {
            edges.push((u, v));
        }
    }
    for v in k + 1..n {
        let clique = tree.attachment_of(v).expect("history checked above");
        if retained == k {
            edges.extend(clique.iter().map(|&u| (u, v as u32)));
        } else {
            for j in index::sample(rng, k, retained) {
                edges.push((clique[j], v as u32));
            }
        }
    }
    Ok(PartialKTree {
        params: *tree.params(),
        b,
        retained,
        adjacency: Adjacency::from_edges(n, &edges)?,
    })
}
