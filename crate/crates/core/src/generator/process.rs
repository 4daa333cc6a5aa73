use rand::RngCore;

use super::params::ProcessParams;
use crate::error::{Error, Result};
use crate::graph::Adjacency;
use crate::rng::{process_rng, uniform_index};

/// Default cap on the estimated heap footprint of one generation.
pub const DEFAULT_MEMORY_BUDGET: u64 = 8 << 30;

/// Append-only store of k-cliques, `k` vertex ids per entry.
///
/// Ids inside an entry are kept in creation order, not sorted. When vertex
/// `i` attaches to clique `C = [c_0, .., c_{k-1}]`, the `k` new cliques are
/// appended in order `j = 0..k`, entry `j` being `C` with position `j`
/// replaced by `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueStore {
    k: usize,
    ids: Vec<u32>,
}

impl CliqueStore {
    pub fn new(k: usize) -> Self {
        Self { k, ids: Vec::new() }
    }

    pub fn with_capacity(k: usize, cliques: usize) -> Self {
        Self {
            k,
            ids: Vec::with_capacity(k * cliques),
        }
    }

    /// Builds a store from explicit cliques, each of length `k`.
    pub fn from_cliques<I, C>(k: usize, cliques: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: AsRef<[u32]>,
    {
        let mut store = Self::new(k);
        for c in cliques {
            let c = c.as_ref();
            if c.len() != k {
                return Err(Error::InvalidParams(format!(
                    "clique of size {} in a store of {k}-cliques",
                    c.len()
                )));
            }
            store.ids.extend_from_slice(c);
        }
        Ok(store)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.ids.len().checked_div(self.k).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    #[inline]
    pub fn get(&self, index: usize) -> &[u32] {
        &self.ids[index * self.k..(index + 1) * self.k]
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[u32]> + '_ {
        self.ids.chunks_exact(self.k)
    }

    fn push(&mut self, clique: &[u32]) {
        self.ids.extend_from_slice(clique);
    }

    /// Appends the `k` cliques formed by swapping `vertex` into each position of
    /// clique `index`.
    #[inline]
    fn push_derived(&mut self, index: usize, vertex: u32, scratch: &mut Vec<u32>) {
        scratch.clear();
        scratch.extend_from_slice(self.get(index));
        for j in 0..self.k {
            let old = scratch[j];
            scratch[j] = vertex;
            self.ids.extend_from_slice(scratch);
            scratch[j] = old;
        }
    }

    pub(crate) fn memory_bytes(&self) -> usize {
        self.ids.len() * 4
    }
}

/// A k-tree under construction.
///
/// Tracks degrees, the clique store and the attachment history; adjacency
/// lists are materialized once by [`KTreeProcess::finish`].
#[derive(Clone, Debug)]
pub struct KTreeProcess {
    params: ProcessParams,
    degrees: Vec<u32>,
    cliques: CliqueStore,
    attachment: Vec<u32>,
    scratch: Vec<u32>,
}

impl KTreeProcess {
    /// The initial `(k+1)`-clique on vertices `0..=k`, with all its `k`-subsets
    /// stored. Subset `j` omits vertex `k - j`, so the first stored clique is
    /// `{0, .., k-1}`.
    pub fn new(params: ProcessParams) -> Result<Self> {
        params.validate()?;
        let k = params.k;
        let mut cliques = CliqueStore::with_capacity(k, params.clique_count() as usize);
        let mut subset = Vec::with_capacity(k);
        for omitted in (0..=k as u32).rev() {
            subset.clear();
            subset.extend((0..=k as u32).filter(|&v| v != omitted));
            cliques.push(&subset);
        }
        let mut degrees = Vec::with_capacity(params.n);
        degrees.resize(k + 1, k as u32);
        Ok(Self {
            params,
            degrees,
            cliques,
            attachment: Vec::with_capacity(params.n - k - 1),
            scratch: Vec::with_capacity(k),
        })
    }

    pub fn params(&self) -> &ProcessParams {
        &self.params
    }

    pub fn vertex_count(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_complete(&self) -> bool {
        self.degrees.len() >= self.params.n
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v] as usize
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn cliques(&self) -> &CliqueStore {
        &self.cliques
    }

    /// Attachment clique indices of vertices `k+1, k+2, ..` in order.
    pub fn attachment(&self) -> &[u32] {
        &self.attachment
    }

    /// Adds one vertex attached to a uniformly drawn stored clique. Returns the
    /// new vertex id, or `None` if the process already has `n` vertices.
    #[inline]
    pub fn step<R: RngCore + ?Sized>(&mut self, rng: &mut R) -> Option<u32> {
        if self.is_complete() {
            return None;
        }
        let index = uniform_index(rng, self.cliques.len() as u64) as usize;
        Some(self.attach_unchecked(index))
    }

    /// Adds one vertex attached to stored clique `clique_index`.
    pub fn attach(&mut self, clique_index: usize) -> Result<u32> {
        if self.is_complete() {
            return Err(Error::InvalidParams(format!(
                "process already has n={} vertices",
                self.params.n
            )));
        }
        if clique_index >= self.cliques.len() {
            return Err(Error::InvalidParams(format!(
                "clique index {clique_index} out of range (store holds {})",
                self.cliques.len()
            )));
        }
        Ok(self.attach_unchecked(clique_index))
    }

    #[inline]
    fn attach_unchecked(&mut self, index: usize) -> u32 {
        let vertex = self.degrees.len() as u32;
        for &u in self.cliques.get(index) {
            self.degrees[u as usize] += 1;
        }
        self.degrees.push(self.params.k as u32);
        self.attachment.push(index as u32);
        self.cliques.push_derived(index, vertex, &mut self.scratch);
        vertex
    }

    /// Freezes the current state into a [`KTree`] with sorted adjacency lists.
    pub fn finish(self) -> KTree {
        let adjacency = build_adjacency(
            self.params.k,
            &self.degrees,
            &self.cliques,
            &self.attachment,
        );
        let n = self.degrees.len();
        KTree {
            params: ProcessParams { n, ..self.params },
            adjacency,
            cliques: self.cliques,
            attachment: self.attachment,
        }
    }
}

/// Lower neighbors of vertex `j` go first in its list (sorted), then later
/// vertices are appended in increasing id order as they are visited.
fn build_adjacency(
    k: usize,
    degrees: &[u32],
    cliques: &CliqueStore,
    attachment: &[u32],
) -> Adjacency {
    let n = degrees.len();
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0u64);
    let mut acc = 0u64;
    for &d in degrees {
        acc += u64::from(d);
        offsets.push(acc);
    }
    let mut neighbors = vec![0u32; acc as usize];
    let mut filled = vec![0u32; n];
    let mut lower: Vec<u32> = Vec::with_capacity(k);
    for j in 0..n {
        lower.clear();
        if j <= k {
            lower.extend(0..j as u32);
        } else {
            lower.extend_from_slice(cliques.get(attachment[j - k - 1] as usize));
            lower.sort_unstable();
        }
        let base = offsets[j] as usize;
        neighbors[base..base + lower.len()].copy_from_slice(&lower);
        filled[j] = lower.len() as u32;
        for &u in &lower {
            let u = u as usize;
            neighbors[offsets[u] as usize + filled[u] as usize] = j as u32;
            filled[u] += 1;
        }
    }
    Adjacency::from_csr(offsets, neighbors)
}

/// A completed random k-tree together with its construction history.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTree {
    params: ProcessParams,
    adjacency: Adjacency,
    cliques: CliqueStore,
    attachment: Vec<u32>,
}

impl KTree {
    /// Reassembles a tree from stored parts. The history is checked for shape
    /// only, not replayed.
    pub fn from_parts(
        params: ProcessParams,
        adjacency: Adjacency,
        cliques: CliqueStore,
        attachment: Vec<u32>,
    ) -> Result<Self> {
        params.validate()?;
        if adjacency.vertex_count() != params.n {
            return Err(Error::InvalidParams(format!(
                "adjacency has {} vertices, params say n={}",
                adjacency.vertex_count(),
                params.n
            )));
        }
        if cliques.k() != params.k {
            return Err(Error::InvalidParams(format!(
                "clique store holds {}-cliques, params say k={}",
                cliques.k(),
                params.k
            )));
        }
        Ok(Self {
            params,
            adjacency,
            cliques,
            attachment,
        })
    }

    pub fn params(&self) -> &ProcessParams {
        &self.params
    }

    pub fn k(&self) -> usize {
        self.params.k
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.vertex_count()
    }

    pub fn adjacency(&self) -> &Adjacency {
        &self.adjacency
    }

    pub fn cliques(&self) -> &CliqueStore {
        &self.cliques
    }

    pub fn attachment(&self) -> &[u32] {
        &self.attachment
    }

    /// Attachment clique of vertex `v`, `None` for the initial clique.
    pub fn attachment_of(&self, v: usize) -> Option<&[u32]> {
        let first = self.params.k + 1;
        if v < first {
            return None;
        }
        self.attachment
            .get(v - first)
            .map(|&c| self.cliques.get(c as usize))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency.degree(v)
    }

    pub fn memory_bytes(&self) -> usize {
        self.adjacency.memory_bytes() + self.cliques.memory_bytes() + self.attachment.len() * 4
    }
}

/// Runs the full process with the default memory budget.
pub fn generate(params: ProcessParams) -> Result<KTree> {
    generate_with_budget(params, DEFAULT_MEMORY_BUDGET)
}

pub fn generate_with_budget(params: ProcessParams, budget_bytes: u64) -> Result<KTree> {
    params.validate()?;
    let required = params.estimated_memory_bytes();
    if required > budget_bytes || params.clique_count() > u64::from(u32::MAX) {
        return Err(Error::ResourceExhausted {
            required,
            budget: budget_bytes,
        });
    }
    let mut rng = process_rng(params.seed);
    generate_with_rng(params, &mut rng)
}

/// Runs the full process drawing from `rng`; `params.seed` is ignored.
pub fn generate_with_rng<R: RngCore + ?Sized>(params: ProcessParams, rng: &mut R) -> Result<KTree> {
    let mut process = KTreeProcess::new(params)?;
    while process.step(rng).is_some() {}
    Ok(process.finish())
}
