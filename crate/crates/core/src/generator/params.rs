use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One instance of the k-tree process: grow a `k`-tree to `n` vertices from `seed`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProcessParams {
    pub k: usize,
    pub n: usize,
    pub seed: u64,
}

impl ProcessParams {
    pub fn new(k: usize, n: usize, seed: u64) -> Result<Self> {
        let params = Self { k, n, seed };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        validate_k_n(self.k, self.n)?;
        if self.n > u32::MAX as usize {
            return Err(Error::InvalidParams(format!(
                "n={} exceeds the 32-bit vertex id space",
                self.n
            )));
        }
        Ok(())
    }

    /// Edges of the finished k-tree: `k(k+1)/2 + k(n-k-1)`.
    pub fn edge_count(&self) -> u64 {
        let (k, n) = (self.k as u64, self.n as u64);
        k * (k + 1) / 2 + k * (n - k - 1)
    }

    /// k-cliques of the finished k-tree: `(n-k-1)k + (k+1)`.
    pub fn clique_count(&self) -> u64 {
        let (k, n) = (self.k as u64, self.n as u64);
        (n - k - 1) * k + (k + 1)
    }

    /// Rough peak heap footprint of [`generate`](super::generate) for these parameters.
    pub fn estimated_memory_bytes(&self) -> u64 {
        let n = self.n as u64;
        let k = self.k as u64;
        let cliques = self.clique_count() * k * 4;
        let history = n * 4;
        let degrees_and_fill = n * 8;
        let csr = (n + 1) * 8 + self.edge_count() * 2 * 4;
        cliques + history + degrees_and_fill + csr
    }
}

pub(crate) fn validate_k_n(k: usize, n: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("k={k}, need k >= 2")));
    }
    if n < k + 1 {
        return Err(Error::InvalidParams(format!(
            "n={n}, need n >= k+1 = {}",
            k + 1
        )));
    }
    Ok(())
}
