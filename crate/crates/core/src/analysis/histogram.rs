use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Adjacency;

/// Degree counts of one graph, or summed over `trials` graphs of equal size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeHistogram {
    pub k: usize,
    pub n: usize,
    pub trials: u64,
    pub counts: BTreeMap<usize, u64>,
}

impl DegreeHistogram {
    pub fn from_degrees(k: usize, degrees: impl IntoIterator<Item = usize>) -> Self {
        let mut counts = BTreeMap::new();
        let mut n = 0;
        for d in degrees {
            *counts.entry(d).or_insert(0) += 1;
            n += 1;
        }
        Self {
            k,
            n,
            trials: 1,
            counts,
        }
    }

    /// Adds another histogram of the same `k` and `n`.
    pub fn merge(&mut self, other: &DegreeHistogram) -> Result<()> {
        if other.k != self.k {
            return Err(Error::KMismatch {
                histogram: self.k,
                theory: other.k,
            });
        }
        if other.n != self.n {
            return Err(Error::InvalidParams(format!(
                "cannot merge histograms with n={} and n={}",
                self.n, other.n
            )));
        }
        for (&d, &c) in &other.counts {
            *self.counts.entry(d).or_insert(0) += c;
        }
        self.trials += other.trials;
        Ok(())
    }

    pub fn count(&self, d: usize) -> u64 {
        self.counts.get(&d).copied().unwrap_or(0)
    }

    /// Mean over trials of the per-graph fraction of degree-`d` vertices.
    pub fn fraction(&self, d: usize) -> f64 {
        self.count(d) as f64 / (self.n as f64 * self.trials as f64)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn degree_sum(&self) -> u64 {
        self.counts.iter().map(|(&d, &c)| d as u64 * c).sum()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.counts.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }

    /// Checks the invariants every k-tree histogram satisfies: `n·trials`
    /// vertices, minimum degree `k`, degree sum twice the k-tree edge count.
    pub fn check_ktree_invariants(&self) -> std::result::Result<(), String> {
        let expected_total = self.n as u64 * self.trials;
        if self.total() != expected_total {
            return Err(format!(
                "counts sum to {}, expected {expected_total}",
                self.total()
            ));
        }
        if let Some(min) = self.min_degree() {
            if min < self.k {
                return Err(format!("degree {min} below k={}", self.k));
            }
        }
        let (k, n) = (self.k as u64, self.n as u64);
        let expected_sum = self.trials * (k * (k + 1) + 2 * k * (n - k - 1));
        if self.degree_sum() != expected_sum {
            return Err(format!(
                "degree sum {} differs from twice the edge count {expected_sum}",
                self.degree_sum()
            ));
        }
        Ok(())
    }
}

pub fn degree_histogram(graph: &Adjacency, k: usize) -> DegreeHistogram {
    DegreeHistogram::from_degrees(k, graph.degrees())
}
