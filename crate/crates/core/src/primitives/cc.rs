use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

use super::RunStats;
use crate::atomic::AtomicArray;
use crate::error::Result;
use crate::graph::CsrGraph;
use crate::load_balance::LoadBalanceParams;
use crate::operators::{compute, filter, Enactor, Functor};
use crate::scalar::Weight;
use crate::{EdgeId, Frontier, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CcOptions {
    pub params: LoadBalanceParams,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CcProblem {
    /// Component id of every vertex: the smallest vertex id in its component.
    pub component: Vec<VertexId>,
    pub num_components: usize,
    /// Iterations of the hooking loop.
    pub hook_iterations: usize,
    /// Iterations of the pointer-jumping loop.
    pub jump_iterations: usize,
    pub stats: RunStats,
}

struct CcData {
    component: AtomicArray<VertexId>,
    changed: AtomicBool,
}

impl CcData {
    /// Root of `v`'s tree, halving the path on the way.
    fn find(&self, mut v: VertexId) -> VertexId {
        loop {
            let parent = self.component.get(v as usize);
            if parent == v {
                return v;
            }
            let grandparent = self.component.get(parent as usize);
            if grandparent != parent {
                self.component.set(v as usize, grandparent);
            }
            v = grandparent;
        }
    }
}

/// Links the trees of an edge's endpoints: odd iterations hang the larger
/// root under the smaller, even iterations the reverse.
struct Hook {
    lower_wins: bool,
}

impl Functor<CcData> for Hook {
    fn cond_edge(&self, s: VertexId, d: VertexId, _: EdgeId, p: &CcData) -> bool {
        let (rs, rd) = (p.find(s), p.find(d));
        if rs == rd {
            return false;
        }
        let (lo, hi) = (rs.min(rd), rs.max(rd));
        let (child, parent) = if self.lower_wins { (hi, lo) } else { (lo, hi) };
        if p.component.compare_exchange(child as usize, child, parent).is_ok() {
            p.changed.store(true, Ordering::Relaxed);
        }
        true
    }
}

/// Moves a vertex to its grandparent; drops it once it points at a root.
struct Jump;

impl Functor<CcData> for Jump {
    fn cond_vertex(&self, v: VertexId, p: &CcData) -> bool {
        let parent = p.component.get(v as usize);
        let grandparent = p.component.get(parent as usize);
        if grandparent == parent {
            return false;
        }
        p.component.set(v as usize, grandparent);
        p.changed.store(true, Ordering::Relaxed);
        true
    }
}

/// Connected components, treating every edge as undirected.
pub fn cc<W: Weight>(g: &CsrGraph<W>, opts: &CcOptions) -> Result<CcProblem> {
    opts.params.validate()?;
    let n = g.num_vertices();
    let en = Enactor::with_params(g, opts.params);
    let data = CcData { component: AtomicArray::from_vec((0..n as VertexId).collect()), changed: AtomicBool::new(false) };

    let sources = g.edge_sources();
    let symmetric = g.is_symmetric();
    let edges: Vec<EdgeId> = (0..g.num_edges() as EdgeId)
        .into_par_iter()
        .filter(|&e| {
            let (s, d) = (sources[e as usize], g.edge_dst(e));
            if symmetric {
                s < d
            } else {
                s != d
            }
        })
        .collect();
    let mut frontier = Frontier::edges(edges);
    let mut hook_iterations = 0;
    while !frontier.is_empty() {
        hook_iterations += 1;
        data.changed.store(false, Ordering::Relaxed);
        frontier = filter(&en, &frontier, &data, &Hook { lower_wins: hook_iterations % 2 == 1 });
        debug_assert!(data.changed.load(Ordering::Relaxed) || frontier.is_empty());
    }

    let mut frontier = filter(&en, &Frontier::all_vertices(n), &data, &Jump);
    let mut jump_iterations = 1;
    while !frontier.is_empty() {
        jump_iterations += 1;
        data.changed.store(false, Ordering::Relaxed);
        frontier = filter(&en, &frontier, &data, &Jump);
    }

    let smallest = AtomicArray::new(n, VertexId::MAX);
    let all = Frontier::all_vertices(n);
    compute(&all, &data, |v, p| {
        smallest.fetch_min(p.component.get(v as usize) as usize, v);
    });
    compute(&all, &data, |v, p| {
        let root = p.component.get(v as usize);
        p.component.set(v as usize, smallest.get(root as usize));
    });
    let component = data.component.to_vec();
    let num_components = component.par_iter().enumerate().filter(|&(v, &c)| v as VertexId == c).count();
    Ok(CcProblem {
        component,
        num_components,
        hook_iterations,
        jump_iterations,
        stats: RunStats { iterations: hook_iterations + jump_iterations, edges_inspected: en.edges_inspected() },
    })
}
