use num_traits::NumCast;

use super::{check_source, RunStats, NO_PRED};
use crate::atomic::AtomicArray;
use crate::error::{Error, Result};
use crate::graph::CsrGraph;
use crate::load_balance::{LoadBalanceParams, StrategyChoice};
use crate::operators::{advance, filter, AdvanceConfig, Enactor, Functor};
use crate::optimizations::NearFarQueue;
use crate::scalar::Weight;
use crate::{EdgeId, Frontier, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SsspOptions<W> {
    /// Width of the near slice. `None` picks [`default_delta`];
    /// `W::max_value()` puts every vertex in one slice.
    pub delta: Option<W>,
    pub strategy: StrategyChoice,
    pub params: LoadBalanceParams,
}

impl<W> Default for SsspOptions<W> {
    fn default() -> Self {
        Self { delta: None, strategy: StrategyChoice::default(), params: LoadBalanceParams::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SsspProblem<W> {
    /// Shortest distance from the source, `W::max_value()` if unreachable.
    pub labels: Vec<W>,
    pub preds: Vec<VertexId>,
    /// Iteration in which each vertex last improved, `u32::MAX` if never.
    pub queue_stamps: Vec<u32>,
    pub delta: W,
    pub stats: RunStats,
}

/// Mean edge weight rounded up, at least 1.
pub fn default_delta<W: Weight>(g: &CsrGraph<W>) -> Result<W> {
    let weights = g.edge_weights().ok_or_else(|| Error::Usage("SSSP requires edge weights".into()))?;
    if weights.is_empty() {
        return Ok(W::one());
    }
    let total: u128 = weights.iter().map(|w| w.to_u128().unwrap_or(u128::MAX)).sum();
    let mean = total.div_ceil(weights.len() as u128).max(1);
    Ok(<W as NumCast>::from(mean).unwrap_or_else(W::max_value))
}

struct SsspData<'a, W: Weight> {
    weights: &'a [W],
    labels: AtomicArray<W>,
    preds: AtomicArray<VertexId>,
    queue_stamps: AtomicArray<u32>,
}

struct UpdateLabel {
    stamp: u32,
}

impl<W: Weight> Functor<SsspData<'_, W>> for UpdateLabel {
    fn cond_edge(&self, s: VertexId, d: VertexId, e: EdgeId, p: &SsspData<'_, W>) -> bool {
        let new_label = p.labels.get(s as usize).saturating_sum(p.weights[e as usize]);
        new_label < p.labels.fetch_min(d as usize, new_label)
    }

    fn apply_edge(&self, s: VertexId, d: VertexId, _: EdgeId, p: &SsspData<'_, W>) {
        p.preds.set(d as usize, s);
        p.queue_stamps.set(d as usize, self.stamp);
    }
}

struct RemoveRedundant {
    stamp: u32,
}

impl<W: Weight> Functor<SsspData<'_, W>> for RemoveRedundant {
    fn cond_vertex(&self, v: VertexId, p: &SsspData<'_, W>) -> bool {
        p.queue_stamps.get(v as usize) == self.stamp
    }
}

pub fn sssp<W: Weight>(g: &CsrGraph<W>, source: VertexId, opts: &SsspOptions<W>) -> Result<SsspProblem<W>> {
    check_source(g, source)?;
    opts.params.validate()?;
    let weights = g.edge_weights().ok_or_else(|| Error::Usage("SSSP requires edge weights".into()))?;
    let delta = match opts.delta {
        Some(d) => d,
        None => default_delta(g)?,
    };
    let n = g.num_vertices();
    let en = Enactor::with_params(g, opts.params);
    let data = SsspData {
        weights,
        labels: AtomicArray::new(n, W::max_value()),
        preds: AtomicArray::new(n, NO_PRED),
        queue_stamps: AtomicArray::new(n, u32::MAX),
    };
    data.labels.set(source as usize, W::zero());
    data.queue_stamps.set(source as usize, 0);

    let cfg = AdvanceConfig::default().with_strategy(opts.strategy);
    let mut queue = NearFarQueue::new(delta)?;
    queue.near = Frontier::vertices(vec![source]);
    let mut iteration = 0u32;
    while !queue.is_exhausted() {
        if queue.near.is_empty() {
            queue = queue.advance_level(&data.labels)?;
            continue;
        }
        iteration += 1;
        let relaxed = advance(&en, &queue.near, &data, &UpdateLabel { stamp: iteration }, &cfg)?;
        let kept = filter(&en, &relaxed, &data, &RemoveRedundant { stamp: iteration });
        queue.push(&kept, &data.labels)?;
    }
    Ok(SsspProblem {
        labels: data.labels.to_vec(),
        preds: data.preds.to_vec(),
        queue_stamps: data.queue_stamps.to_vec(),
        delta,
        stats: RunStats { iterations: iteration as usize, edges_inspected: en.edges_inspected() },
    })
}
