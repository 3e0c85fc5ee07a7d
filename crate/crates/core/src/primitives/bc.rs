use rayon::prelude::*;

use super::{check_source, RunStats, UNREACHED};
use crate::atomic::AtomicArray;
use crate::error::Result;
use crate::graph::CsrGraph;
use crate::load_balance::{LoadBalanceParams, StrategyChoice};
use crate::operators::{advance, compute, AdvanceConfig, Enactor, Functor};
use crate::scalar::{Real, Weight};
use crate::{EdgeId, Frontier, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum BcSources {
    #[default]
    All,
    List(Vec<VertexId>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BcOptions {
    pub strategy: StrategyChoice,
    pub params: LoadBalanceParams,
}

/// Centrality scores plus the per-source arrays of the last source processed.
#[derive(Debug, Clone, PartialEq)]
pub struct BcProblem<T> {
    pub sigma: Vec<T>,
    pub depth: Vec<u32>,
    pub dependency: Vec<T>,
    /// Summed dependencies, halved on symmetric graphs so each unordered
    /// pair of endpoints counts once.
    pub bc: Vec<T>,
    pub stats: RunStats,
}

struct BcData<T: Real> {
    depth: AtomicArray<u32>,
    sigma: AtomicArray<T>,
    dependency: AtomicArray<T>,
    /// Successor edge contributions, one exclusive slot per edge.
    contrib: AtomicArray<T>,
}

struct Discover {
    depth: u32,
}

impl<T: Real> Functor<BcData<T>> for Discover {
    fn cond_edge(&self, _: VertexId, d: VertexId, _: EdgeId, p: &BcData<T>) -> bool {
        p.depth.compare_exchange(d as usize, UNREACHED, self.depth + 1).is_ok()
    }
}

struct Backpropagate;

impl<T: Real> Functor<BcData<T>> for Backpropagate {
    fn cond_edge(&self, s: VertexId, d: VertexId, _: EdgeId, p: &BcData<T>) -> bool {
        p.depth.get(d as usize) == p.depth.get(s as usize) + 1
    }

    fn apply_edge(&self, s: VertexId, d: VertexId, e: EdgeId, p: &BcData<T>) {
        let ratio = p.sigma.get(s as usize) / p.sigma.get(d as usize);
        p.contrib.set(e as usize, ratio * (T::one() + p.dependency.get(d as usize)));
    }
}

pub fn bc<T: Real, W: Weight>(g: &CsrGraph<W>, sources: &BcSources, opts: &BcOptions) -> Result<BcProblem<T>> {
    opts.params.validate()?;
    let n = g.num_vertices();
    let list: Vec<VertexId> = match sources {
        BcSources::All => (0..n as VertexId).collect(),
        BcSources::List(list) => {
            for &s in list {
                check_source(g, s)?;
            }
            list.clone()
        }
    };
    let en = Enactor::with_params(g, opts.params);
    let pg = g.pull_graph();
    let data = BcData {
        depth: AtomicArray::new(n, UNREACHED),
        sigma: AtomicArray::new(n, T::zero()),
        dependency: AtomicArray::new(n, T::zero()),
        contrib: AtomicArray::new(g.num_edges(), T::zero()),
    };
    let forward = AdvanceConfig::default().with_strategy(opts.strategy);
    let backward = forward.without_output();
    let mut bc = vec![T::zero(); n];
    let mut iterations = 0;

    for &source in &list {
        data.depth.fill(UNREACHED);
        data.sigma.fill(T::zero());
        data.dependency.fill(T::zero());
        data.depth.set(source as usize, 0);
        data.sigma.set(source as usize, T::one());

        let mut levels = Vec::new();
        let mut frontier = Frontier::vertices(vec![source]);
        let mut level = 0u32;
        while !frontier.is_empty() {
            let next = advance(&en, &frontier, &data, &Discover { depth: level }, &forward)?;
            compute(&next, &data, |v, p| {
                let parent_depth = p.depth.get(v as usize) - 1;
                let paths = pg
                    .neighbors(v)
                    .iter()
                    .filter(|&&u| p.depth.get(u as usize) == parent_depth)
                    .fold(T::zero(), |acc, &u| acc + p.sigma.get(u as usize));
                p.sigma.set(v as usize, paths);
            });
            levels.push(std::mem::replace(&mut frontier, next));
            level += 1;
            iterations += 1;
        }

        for frontier in levels.iter().rev() {
            advance(&en, frontier, &data, &Backpropagate, &backward)?;
            compute(frontier, &data, |v, p| {
                let child_depth = p.depth.get(v as usize) + 1;
                let total = g
                    .edge_range(v)
                    .filter(|&e| p.depth.get(g.edge_dst(e as EdgeId) as usize) == child_depth)
                    .fold(T::zero(), |acc, e| acc + p.contrib.get(e));
                p.dependency.set(v as usize, total);
            });
            iterations += 1;
        }

        bc.par_iter_mut().enumerate().for_each(|(v, score)| {
            if v != source as usize {
                *score = *score + data.dependency.get(v);
            }
        });
    }

    if g.is_symmetric() {
        let half = T::from_f64(0.5).expect("0.5 is representable");
        bc.par_iter_mut().for_each(|x| *x = *x * half);
    }
    Ok(BcProblem {
        sigma: data.sigma.to_vec(),
        depth: data.depth.to_vec(),
        dependency: data.dependency.to_vec(),
        bc,
        stats: RunStats { iterations, edges_inspected: en.edges_inspected() },
    })
}
