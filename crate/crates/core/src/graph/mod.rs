//! Graph construction and compressed-sparse-row storage.

mod generate;
mod mtx;
mod stats;
mod transform;

use std::ops::Range;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::Weight;
use crate::{EdgeId, VertexId};

pub use generate::{generate_synthetic, SyntheticKind};
pub use mtx::{read_matrix_market, write_matrix_market};
pub use stats::{compute_stats, GraphStats};
pub use transform::{assign_random_weights, to_undirected, MAX_RANDOM_WEIGHT, MIN_RANDOM_WEIGHT};

/// A directed edge list, optionally weighted.
///
/// Weights are either absent or present on every edge; [`EdgeList::weighted`]
/// enforces that at construction. Vertex ranges are checked by [`build_csr`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList<W = u32> {
    pub num_vertices: usize,
    pub edges: Vec<(VertexId, VertexId)>,
    pub weights: Option<Vec<W>>,
}

impl<W: Weight> EdgeList<W> {
    pub fn new(num_vertices: usize, edges: Vec<(VertexId, VertexId)>) -> Self {
        Self { num_vertices, edges, weights: None }
    }

    pub fn weighted(num_vertices: usize, edges: Vec<(VertexId, VertexId)>, weights: Vec<W>) -> Result<Self> {
        if edges.len() != weights.len() {
            return Err(Error::WeightCountMismatch { edges: edges.len(), weights: weights.len() });
        }
        Ok(Self { num_vertices, edges, weights: Some(weights) })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    pub fn weight(&self, i: usize) -> Option<W> {
        self.weights.as_ref().map(|w| w[i])
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(w) = &self.weights {
            if w.len() != self.edges.len() {
                return Err(Error::WeightCountMismatch { edges: self.edges.len(), weights: w.len() });
            }
        }
        let n = self.num_vertices;
        if let Some((index, &(src, dst))) =
            self.edges.iter().enumerate().find(|(_, &(s, d))| s as usize >= n || d as usize >= n)
        {
            return Err(Error::VertexOutOfRange { index, src, dst, num_vertices: n });
        }
        Ok(())
    }

    /// Edges with weights attached, in list order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexId, VertexId, Option<W>)> + '_ {
        self.edges.iter().enumerate().map(|(i, &(s, d))| (s, d, self.weight(i)))
    }
}

/// Immutable CSR topology.
///
/// Neighbors of `v` are `column_indices[row_offsets[v]..row_offsets[v + 1]]`,
/// sorted ascending. An edge id is the position of the edge in
/// `column_indices`. The flat per-edge source array, the reverse graph used
/// by pull traversal, and the maximum degree are derived lazily and cached.
#[derive(Debug, Clone)]
pub struct CsrGraph<W = u32> {
    row_offsets: Vec<usize>,
    column_indices: Vec<VertexId>,
    edge_weights: Option<Vec<W>>,
    edge_sources: OnceLock<Vec<VertexId>>,
    symmetric: OnceLock<bool>,
    reverse: OnceLock<Box<CsrGraph<W>>>,
    max_degree: OnceLock<usize>,
}

/// Build a CSR graph from an edge list.
///
/// Uses two stable counting-sort passes (by destination, then by source) so
/// each neighbor list ends up sorted and every weight travels with its edge.
pub fn build_csr<W: Weight>(edges: &EdgeList<W>) -> Result<CsrGraph<W>> {
    edges.validate()?;
    let n = edges.num_vertices;
    let m = edges.edges.len();
    if m >= u32::MAX as usize || n >= u32::MAX as usize {
        return Err(Error::TooLarge(format!("{n} vertices / {m} edges exceed 32-bit ids")));
    }

    let by_dst = counting_sort(n, (0..m).map(|i| edges.edges[i].1), (0..m).collect::<Vec<_>>());
    let order = counting_sort(n, by_dst.iter().map(|&i| edges.edges[i].0), by_dst.clone());

    let mut row_offsets = vec![0usize; n + 1];
    for &(s, _) in &edges.edges {
        row_offsets[s as usize + 1] += 1;
    }
    for v in 0..n {
        row_offsets[v + 1] += row_offsets[v];
    }
    let column_indices = order.iter().map(|&i| edges.edges[i].1).collect();
    let edge_weights = edges.weights.as_ref().map(|w| order.iter().map(|&i| w[i]).collect());
    Ok(CsrGraph::from_parts_unchecked(row_offsets, column_indices, edge_weights))
}

/// Stable counting sort of `items` by `keys`; `keys` yields one key per item.
fn counting_sort(n: usize, keys: impl Iterator<Item = VertexId> + Clone, items: Vec<usize>) -> Vec<usize> {
    let mut offsets = vec![0usize; n + 1];
    for k in keys.clone() {
        offsets[k as usize + 1] += 1;
    }
    for v in 0..n {
        offsets[v + 1] += offsets[v];
    }
    let mut out = vec![0usize; items.len()];
    for (k, item) in keys.zip(items) {
        let slot = &mut offsets[k as usize];
        out[*slot] = item;
        *slot += 1;
    }
    out
}

impl<W: Weight> CsrGraph<W> {
    fn from_parts_unchecked(row_offsets: Vec<usize>, column_indices: Vec<VertexId>, edge_weights: Option<Vec<W>>) -> Self {
        Self {
            row_offsets,
            column_indices,
            edge_weights,
            edge_sources: OnceLock::new(),
            symmetric: OnceLock::new(),
            reverse: OnceLock::new(),
            max_degree: OnceLock::new(),
        }
    }

    /// Wrap raw CSR arrays, checking every structural invariant.
    pub fn from_parts(row_offsets: Vec<usize>, column_indices: Vec<VertexId>, edge_weights: Option<Vec<W>>) -> Result<Self> {
        let g = Self::from_parts_unchecked(row_offsets, column_indices, edge_weights);
        g.check_invariants()?;
        Ok(g)
    }

    pub fn check_invariants(&self) -> Result<()> {
        let r = &self.row_offsets;
        if r.is_empty() {
            return Err(Error::InvalidCsr("row_offsets must have num_vertices + 1 entries".into()));
        }
        if r[0] != 0 {
            return Err(Error::InvalidCsr(format!("row_offsets[0] = {}", r[0])));
        }
        if *r.last().unwrap() != self.column_indices.len() {
            return Err(Error::InvalidCsr(format!(
                "row_offsets ends at {} but there are {} column indices",
                r.last().unwrap(),
                self.column_indices.len()
            )));
        }
        if let Some(v) = r.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::InvalidCsr(format!("row_offsets decreases at vertex {v}")));
        }
        let n = self.num_vertices();
        if let Some(e) = self.column_indices.iter().position(|&c| c as usize >= n) {
            return Err(Error::InvalidCsr(format!("column index {} at edge {e} out of range", self.column_indices[e])));
        }
        if let Some(w) = &self.edge_weights {
            if w.len() != self.column_indices.len() {
                return Err(Error::WeightCountMismatch { edges: self.column_indices.len(), weights: w.len() });
            }
        }
        for v in 0..n {
            if !self.neighbors(v as VertexId).windows(2).all(|p| p[0] <= p[1]) {
                return Err(Error::InvalidCsr(format!("neighbor list of {v} is not sorted")));
            }
        }
        Ok(())
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.row_offsets.len() - 1
    }

    #[inline]
    pub fn num_edges(&self) -> usize {
        self.column_indices.len()
    }

    pub fn row_offsets(&self) -> &[usize] {
        &self.row_offsets
    }

    pub fn column_indices(&self) -> &[VertexId] {
        &self.column_indices
    }

    pub fn edge_weights(&self) -> Option<&[W]> {
        self.edge_weights.as_deref()
    }

    pub fn is_weighted(&self) -> bool {
        self.edge_weights.is_some()
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        let v = v as usize;
        self.row_offsets[v + 1] - self.row_offsets[v]
    }

    #[inline]
    pub fn edge_range(&self, v: VertexId) -> Range<usize> {
        let v = v as usize;
        self.row_offsets[v]..self.row_offsets[v + 1]
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.column_indices[self.edge_range(v)]
    }

    #[inline]
    pub fn edge_dst(&self, e: EdgeId) -> VertexId {
        self.column_indices[e as usize]
    }

    #[inline]
    pub fn edge_weight(&self, e: EdgeId) -> Option<W> {
        self.edge_weights.as_ref().map(|w| w[e as usize])
    }

    /// Source vertex of every edge, indexed by edge id.
    pub fn edge_sources(&self) -> &[VertexId] {
        self.edge_sources.get_or_init(|| {
            let mut src = vec![0; self.num_edges()];
            for v in 0..self.num_vertices() {
                src[self.edge_range(v as VertexId)].fill(v as VertexId);
            }
            src
        })
    }

    #[inline]
    pub fn edge_src(&self, e: EdgeId) -> VertexId {
        self.edge_sources()[e as usize]
    }

    pub fn max_degree(&self) -> usize {
        *self.max_degree.get_or_init(|| {
            (0..self.num_vertices()).into_par_iter().map(|v| self.degree(v as VertexId)).max().unwrap_or(0)
        })
    }

    /// True when `u -> v` is an edge exactly when `v -> u` is.
    pub fn is_symmetric(&self) -> bool {
        *self.symmetric.get_or_init(|| {
            (0..self.num_vertices()).into_par_iter().all(|u| {
                let u = u as VertexId;
                self.neighbors(u).iter().all(|&v| self.neighbors(v).binary_search(&u).is_ok())
            })
        })
    }

    /// The transpose graph: `v -> u` for every edge `u -> v`, weights carried along.
    pub fn reverse(&self) -> &CsrGraph<W> {
        self.reverse.get_or_init(|| Box::new(self.transpose()))
    }

    /// Graph whose neighbor lists are the in-neighbors of each vertex.
    ///
    /// For symmetric graphs that is the graph itself; otherwise the reverse
    /// CSR is built once and cached.
    pub fn pull_graph(&self) -> &CsrGraph<W> {
        if self.is_symmetric() {
            self
        } else {
            self.reverse()
        }
    }

    fn transpose(&self) -> CsrGraph<W> {
        let n = self.num_vertices();
        let mut counts = vec![0usize; n + 1];
        for &d in &self.column_indices {
            counts[d as usize + 1] += 1;
        }
        for v in 0..n {
            counts[v + 1] += counts[v];
        }
        let row_offsets = counts.clone();
        let mut cols = vec![0; self.num_edges()];
        let mut weights = self.edge_weights.as_ref().map(|_| vec![W::zero(); self.num_edges()]);
        // Sources are visited in ascending order, so each reversed list comes out sorted.
        for u in 0..n {
            for e in self.edge_range(u as VertexId) {
                let d = self.column_indices[e] as usize;
                let slot = counts[d];
                counts[d] += 1;
                cols[slot] = u as VertexId;
                if let (Some(out), Some(w)) = (weights.as_mut(), self.edge_weights.as_ref()) {
                    out[slot] = w[e];
                }
            }
        }
        CsrGraph::from_parts_unchecked(row_offsets, cols, weights)
    }

    /// Flatten back into an edge list in CSR order.
    pub fn to_edge_list(&self) -> EdgeList<W> {
        let edges = self.edge_sources().iter().copied().zip(self.column_indices.iter().copied()).collect();
        EdgeList { num_vertices: self.num_vertices(), edges, weights: self.edge_weights.clone() }
    }
}
