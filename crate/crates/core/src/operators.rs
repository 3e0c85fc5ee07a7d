//! The three frontier operators and the functor interface they fuse.
//!
//! A [`Functor`] carries the per-edge and per-vertex callbacks of a
//! primitive. Operators call them from inside their single parallel pass
//! over the assigned work, so no per-edge intermediate result is ever
//! materialized. Callbacks receive problem data by shared reference and may
//! only mutate it through [`AtomicArray`](crate::AtomicArray) operations or
//! slots owned exclusively by the element being processed.

use std::borrow::Cow;
use std::sync::atomic::{AtomicU32, AtomicU64, Ordering};
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::atomic::AtomicArray;
use crate::error::{Error, Result};
use crate::graph::CsrGraph;
use crate::load_balance::{for_each_edge, resolve_strategy, LoadBalanceParams, StrategyChoice};
use crate::optimizations::DirectionMode;
use crate::scalar::Weight;
use crate::{EdgeId, Frontier, FrontierKind, VertexId};

/// User callbacks fused into [`advance`] and [`filter`].
///
/// Conditions default to `true` and applies to no-ops, so a functor only
/// implements what its primitive needs.
pub trait Functor<P: ?Sized>: Sync {
    fn cond_edge(&self, _src: VertexId, _dst: VertexId, _edge: EdgeId, _data: &P) -> bool {
        true
    }

    fn apply_edge(&self, _src: VertexId, _dst: VertexId, _edge: EdgeId, _data: &P) {}

    fn cond_vertex(&self, _v: VertexId, _data: &P) -> bool {
        true
    }

    fn apply_vertex(&self, _v: VertexId, _data: &P) {}
}

/// Functor with every callback left at its default.
#[derive(Debug, Clone, Copy, Default)]
pub struct AcceptAll;

impl<P: ?Sized> Functor<P> for AcceptAll {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdvanceConfig {
    pub input: FrontierKind,
    pub output: FrontierKind,
    /// Idempotent advance skips the uniqueness claim on output vertices, so
    /// a vertex reached over several edges may appear several times.
    pub idempotent: bool,
    pub direction: DirectionMode,
    pub strategy: StrategyChoice,
    /// When false the advance only runs its functors and returns an empty frontier.
    pub emit_output: bool,
}

impl Default for AdvanceConfig {
    fn default() -> Self {
        Self {
            input: FrontierKind::Vertex,
            output: FrontierKind::Vertex,
            idempotent: false,
            direction: DirectionMode::Push,
            strategy: StrategyChoice::Auto,
            emit_output: true,
        }
    }
}

impl AdvanceConfig {
    pub fn new(input: FrontierKind, output: FrontierKind) -> Self {
        Self { input, output, ..Self::default() }
    }

    pub fn with_strategy(mut self, strategy: StrategyChoice) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn with_idempotent(mut self, idempotent: bool) -> Self {
        self.idempotent = idempotent;
        self
    }

    pub fn without_output(mut self) -> Self {
        self.emit_output = false;
        self
    }
}

/// Execution context for one traversal run over an immutable graph.
///
/// Holds the load-balancing thresholds, work counters, and the per-vertex
/// claim stamps non-idempotent advance uses to emit each vertex once. Not
/// reentrant: one run at a time per enactor.
pub struct Enactor<'g, W: Weight = u32> {
    graph: &'g CsrGraph<W>,
    params: LoadBalanceParams,
    edges_inspected: AtomicU64,
    claims: OnceLock<AtomicArray<u32>>,
    claim_epoch: AtomicU32,
}

impl<'g, W: Weight> Enactor<'g, W> {
    pub fn new(graph: &'g CsrGraph<W>) -> Self {
        Self::with_params(graph, LoadBalanceParams::default())
    }

    pub fn with_params(graph: &'g CsrGraph<W>, params: LoadBalanceParams) -> Self {
        Self { graph, params, edges_inspected: AtomicU64::new(0), claims: OnceLock::new(), claim_epoch: AtomicU32::new(0) }
    }

    #[inline]
    pub fn graph(&self) -> &'g CsrGraph<W> {
        self.graph
    }

    pub fn params(&self) -> &LoadBalanceParams {
        &self.params
    }

    /// Edges examined by advance and pull steps since construction or the last reset.
    pub fn edges_inspected(&self) -> u64 {
        self.edges_inspected.load(Ordering::Relaxed)
    }

    pub fn reset_counters(&self) {
        self.edges_inspected.store(0, Ordering::Relaxed);
    }

    pub(crate) fn add_inspected(&self, n: u64) {
        self.edges_inspected.fetch_add(n, Ordering::Relaxed);
    }

    fn next_claim_epoch(&self) -> (u32, &AtomicArray<u32>) {
        let claims = self.claims.get_or_init(|| AtomicArray::new(self.graph.num_vertices(), 0));
        let mut epoch = self.claim_epoch.fetch_add(1, Ordering::Relaxed).wrapping_add(1);
        if epoch == 0 {
            claims.fill(0);
            self.claim_epoch.store(1, Ordering::Relaxed);
            epoch = 1;
        }
        (epoch, claims)
    }
}

fn concat(parts: Vec<Vec<u32>>) -> Vec<u32> {
    if parts.len() == 1 {
        return parts.into_iter().next().unwrap();
    }
    let mut out = Vec::with_capacity(parts.iter().map(Vec::len).sum());
    for p in parts {
        out.extend(p);
    }
    out
}

/// Visit the neighbors of every frontier element and build the next frontier.
///
/// For a vertex frontier the expanded lists are those of the frontier
/// vertices; for an edge frontier they are those of each edge's destination.
/// For every inspected edge `cond_edge` decides whether it passes; passing
/// edges get `apply_edge` once and contribute their destination vertex (or
/// the edge id itself for an edge output). Non-idempotent advance emits each
/// destination vertex at most once per call.
pub fn advance<W, P, F>(en: &Enactor<'_, W>, f: &Frontier, data: &P, fs: &F, cfg: &AdvanceConfig) -> Result<Frontier>
where
    W: Weight,
    P: Sync + ?Sized,
    F: Functor<P>,
{
    if f.kind() != cfg.input {
        return Err(Error::Usage(format!("advance expected a {:?} frontier, got {:?}", cfg.input, f.kind())));
    }
    if cfg.direction == DirectionMode::Pull {
        return Err(Error::Usage("pull traversal needs a visited bitmap; use optimizations::pull_advance".into()));
    }
    let g = en.graph();
    let sources: Cow<'_, [VertexId]> = match f.kind() {
        FrontierKind::Vertex => Cow::Borrowed(f.items()),
        FrontierKind::Edge => Cow::Owned(f.items().par_iter().map(|&e| g.edge_dst(e)).collect()),
    };
    let strategy = resolve_strategy(cfg.strategy, &sources, g, en.params());
    let emit = cfg.emit_output;
    let output = cfg.output;
    let claim = (emit && !cfg.idempotent && output == FrontierKind::Vertex).then(|| en.next_claim_epoch());

    let parts = for_each_edge(g, &sources, strategy, || (Vec::new(), 0u64), |acc: &mut (Vec<u32>, u64), s, d, e| {
        acc.1 += 1;
        if !fs.cond_edge(s, d, e, data) {
            return;
        }
        fs.apply_edge(s, d, e, data);
        if !emit {
            return;
        }
        match output {
            FrontierKind::Edge => acc.0.push(e),
            FrontierKind::Vertex => match claim {
                Some((epoch, claims)) => {
                    if claims.swap(d as usize, epoch) != epoch {
                        acc.0.push(d);
                    }
                }
                None => acc.0.push(d),
            },
        }
    });
    let (items, counts): (Vec<Vec<u32>>, Vec<u64>) = parts.into_iter().unzip();
    en.add_inspected(counts.iter().sum());
    Ok(Frontier::new(output, concat(items)).with_generation(f.generation() + 1))
}

/// Keep the elements whose condition holds, preserving their relative order.
///
/// Vertex frontiers use `cond_vertex`/`apply_vertex`; edge frontiers use
/// `cond_edge`/`apply_edge` with the edge's endpoints. The apply callback
/// runs exactly once for each survivor.
pub fn filter<W, P, F>(en: &Enactor<'_, W>, f: &Frontier, data: &P, fs: &F) -> Frontier
where
    W: Weight,
    P: Sync + ?Sized,
    F: Functor<P>,
{
    let g = en.graph();
    let items: Vec<u32> = match f.kind() {
        FrontierKind::Vertex => f
            .items()
            .par_iter()
            .copied()
            .filter(|&v| {
                let keep = fs.cond_vertex(v, data);
                if keep {
                    fs.apply_vertex(v, data);
                }
                keep
            })
            .collect(),
        FrontierKind::Edge => {
            let sources = g.edge_sources();
            f.items()
                .par_iter()
                .copied()
                .filter(|&e| {
                    let (s, d) = (sources[e as usize], g.edge_dst(e));
                    let keep = fs.cond_edge(s, d, e, data);
                    if keep {
                        fs.apply_edge(s, d, e, data);
                    }
                    keep
                })
                .collect()
        }
    };
    Frontier::new(f.kind(), items).with_generation(f.generation())
}

/// Apply `op` once to every frontier element.
pub fn compute<P, Op>(f: &Frontier, data: &P, op: Op)
where
    P: Sync + ?Sized,
    Op: Fn(u32, &P) + Sync + Send,
{
    f.items().par_iter().for_each(|&x| op(x, data));
}
