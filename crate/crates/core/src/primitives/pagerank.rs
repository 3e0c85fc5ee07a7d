use rayon::prelude::*;

use super::RunStats;
use crate::atomic::{AtomicArray, FixedAddArray};
use crate::error::{Error, Result};
use crate::graph::CsrGraph;
use crate::load_balance::{LoadBalanceParams, StrategyChoice};
use crate::operators::{advance, compute, filter, AdvanceConfig, Enactor, Functor};
use crate::scalar::{Real, Weight};
use crate::{EdgeId, Frontier, VertexId};

pub const DEFAULT_DAMPING: f64 = 0.85;
pub const DEFAULT_EPSILON: f64 = 1e-6;
pub const DEFAULT_MAX_ITERS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrOptions {
    pub damping: f64,
    /// A vertex leaves the frontier once its rank moves by less than
    /// `epsilon` times its new rank in one iteration.
    pub epsilon: f64,
    pub max_iters: usize,
    pub strategy: StrategyChoice,
    pub params: LoadBalanceParams,
}

impl Default for PrOptions {
    fn default() -> Self {
        Self {
            damping: DEFAULT_DAMPING,
            epsilon: DEFAULT_EPSILON,
            max_iters: DEFAULT_MAX_ITERS,
            strategy: StrategyChoice::default(),
            params: LoadBalanceParams::default(),
        }
    }
}

impl PrOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.damping > 0.0 && self.damping < 1.0) {
            return Err(Error::Usage(format!("damping must lie in (0, 1), got {}", self.damping)));
        }
        if !(self.epsilon > 0.0 && self.epsilon.is_finite()) {
            return Err(Error::Usage(format!("epsilon must be positive, got {}", self.epsilon)));
        }
        self.params.validate()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PrProblem<T> {
    pub rank: Vec<T>,
    pub out_degree: Vec<u32>,
    /// Sum of all ranks after each iteration.
    pub mass_history: Vec<f64>,
    /// Frontier size after each iteration's filter.
    pub active_history: Vec<usize>,
    /// Whether the frontier emptied before `max_iters`.
    pub converged: bool,
    pub stats: RunStats,
}

struct PrData<T: Real> {
    rank: AtomicArray<T>,
    next_rank: AtomicArray<T>,
    /// Fixed-point share each vertex sends along every out-edge.
    share: Vec<u64>,
    /// Fixed-point in-flow; the sums are exact and independent of addition order.
    incoming: FixedAddArray,
    epsilon: T,
}

struct Scatter;

impl<T: Real> Functor<PrData<T>> for Scatter {
    fn apply_edge(&self, s: VertexId, d: VertexId, _: EdgeId, p: &PrData<T>) {
        p.incoming.add_raw(d as usize, p.share[s as usize]);
    }
}

struct Unconverged;

impl<T: Real> Functor<PrData<T>> for Unconverged {
    fn cond_vertex(&self, v: VertexId, p: &PrData<T>) -> bool {
        let (old, new) = (p.rank.get(v as usize), p.next_rank.get(v as usize));
        (new - old).abs() >= p.epsilon * new
    }
}

/// PageRank by synchronous power iteration.
///
/// Every vertex scatters its rank each iteration; the frontier only tracks
/// which vertices are still moving, and the run stops when it empties.
/// Rank held by vertices without out-edges is spread evenly over all
/// vertices, so the ranks always sum to one.
pub fn pagerank<T: Real, W: Weight>(g: &CsrGraph<W>, opts: &PrOptions) -> Result<PrProblem<T>> {
    opts.validate()?;
    let n = g.num_vertices();
    let out_degree: Vec<u32> = (0..n as VertexId).into_par_iter().map(|v| g.degree(v) as u32).collect();
    if n == 0 {
        return Ok(PrProblem {
            rank: Vec::new(),
            out_degree,
            mass_history: Vec::new(),
            active_history: Vec::new(),
            converged: true,
            stats: RunStats::default(),
        });
    }
    let en = Enactor::with_params(g, opts.params);
    let init = T::from_f64(1.0 / n as f64).expect("representable");
    let mut data = PrData {
        rank: AtomicArray::new(n, init),
        next_rank: AtomicArray::new(n, T::zero()),
        share: vec![0; n],
        incoming: FixedAddArray::new(n),
        epsilon: T::from_f64(opts.epsilon).expect("representable"),
    };
    let cfg = AdvanceConfig::default().with_strategy(opts.strategy).without_output();
    let all = Frontier::all_vertices(n);
    let base = (1.0 - opts.damping) / n as f64;
    let mut frontier = all.clone();
    let mut mass_history = Vec::new();
    let mut active_history = Vec::new();
    let mut iterations = 0;

    while !frontier.is_empty() && iterations < opts.max_iters {
        iterations += 1;
        let rank = &data.rank;
        data.share.par_iter_mut().enumerate().for_each(|(v, share)| {
            let r = rank.get(v).to_f64().expect("finite rank");
            *share = FixedAddArray::encode(if out_degree[v] > 0 { r / out_degree[v] as f64 } else { r });
        });
        let dangling_raw: u64 = (0..n).into_par_iter().filter(|&v| out_degree[v] == 0).map(|v| data.share[v]).sum();
        let dangling = FixedAddArray::decode(dangling_raw) / n as f64;

        data.incoming.clear();
        advance(&en, &all, &data, &Scatter, &cfg)?;
        compute(&all, &data, |v, p| {
            let value = base + opts.damping * (p.incoming.get(v as usize) + dangling);
            p.next_rank.set(v as usize, T::from_f64(value).expect("representable"));
        });
        frontier = filter(&en, &frontier, &data, &Unconverged);
        std::mem::swap(&mut data.rank, &mut data.next_rank);

        mass_history.push(data.rank.to_vec().iter().map(|r| r.to_f64().unwrap_or(f64::NAN)).sum());
        active_history.push(frontier.len());
    }
    Ok(PrProblem {
        rank: data.rank.to_vec(),
        out_degree,
        mass_history,
        active_history,
        converged: frontier.is_empty(),
        stats: RunStats { iterations, edges_inspected: en.edges_inspected() },
    })
}
