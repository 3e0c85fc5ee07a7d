use std::collections::{BTreeMap, VecDeque};

use super::CsrGraph;
use crate::scalar::Weight;
use crate::VertexId;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    pub num_vertices: usize,
    pub num_edges: usize,
    pub max_degree: usize,
    /// Double-sweep lower bound on the diameter; `None` for an edgeless graph.
    pub diameter_estimate: Option<usize>,
    /// Out-degree -> number of vertices with that degree.
    pub degree_histogram: BTreeMap<usize, usize>,
}

impl GraphStats {
    /// Lower median of the out-degree distribution.
    pub fn median_degree(&self) -> usize {
        if self.num_vertices == 0 {
            return 0;
        }
        let target = (self.num_vertices - 1) / 2;
        let mut seen = 0;
        for (&degree, &count) in &self.degree_histogram {
            seen += count;
            if seen > target {
                return degree;
            }
        }
        unreachable!("histogram counts sum to num_vertices")
    }
}

pub fn compute_stats<W: Weight>(g: &CsrGraph<W>) -> GraphStats {
    let n = g.num_vertices();
    let mut degree_histogram = BTreeMap::new();
    for v in 0..n {
        *degree_histogram.entry(g.degree(v as VertexId)).or_insert(0) += 1;
    }
    let diameter_estimate = (0..n as VertexId).find(|&v| g.degree(v) > 0).map(|start| {
        let (far, first) = farthest(g, start);
        first.max(farthest(g, far).1)
    });
    GraphStats { num_vertices: n, num_edges: g.num_edges(), max_degree: g.max_degree(), diameter_estimate, degree_histogram }
}

/// Serial BFS returning the last vertex reached and its depth.
fn farthest<W: Weight>(g: &CsrGraph<W>, source: VertexId) -> (VertexId, usize) {
    let mut depth = vec![usize::MAX; g.num_vertices()];
    let mut queue = VecDeque::from([source]);
    depth[source as usize] = 0;
    let mut last = (source, 0);
    while let Some(u) = queue.pop_front() {
        let du = depth[u as usize];
        last = (u, du);
        for &v in g.neighbors(u) {
            if depth[v as usize] == usize::MAX {
                depth[v as usize] = du + 1;
                queue.push_back(v);
            }
        }
    }
    last
}
