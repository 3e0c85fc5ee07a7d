use super::{check_source, RunStats, NO_PRED, UNREACHED};
use crate::atomic::AtomicArray;
use crate::error::Result;
use crate::graph::CsrGraph;
use crate::load_balance::{LoadBalanceParams, StrategyChoice};
use crate::operators::{advance, filter, AdvanceConfig, Enactor, Functor};
use crate::optimizations::{decide_direction, idempotent_dedupe, pull_advance, CullingState, Direction, DirectionMode, VisitedBitmap};
use crate::scalar::Weight;
use crate::{EdgeId, Frontier, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BfsOptions {
    pub direction: DirectionMode,
    /// Let duplicate discoveries through advance and cull them afterwards
    /// instead of claiming each vertex with a compare-and-swap.
    pub idempotent: bool,
    pub strategy: StrategyChoice,
    pub params: LoadBalanceParams,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BfsStats {
    pub run: RunStats,
    /// Direction taken by each iteration.
    pub directions: Vec<Direction>,
    /// Frontier size entering each iteration.
    pub frontier_sizes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsProblem {
    /// Hop distance from the source, [`UNREACHED`] if none.
    pub labels: Vec<u32>,
    /// BFS-tree parent, [`NO_PRED`] for the source and unreached vertices.
    pub preds: Vec<VertexId>,
    pub stats: BfsStats,
}

struct BfsData {
    labels: AtomicArray<u32>,
    preds: AtomicArray<VertexId>,
    visited: VisitedBitmap,
}

/// Discovery through a single compare-and-swap on the label.
struct ClaimDiscover {
    depth: u32,
}

impl Functor<BfsData> for ClaimDiscover {
    fn cond_edge(&self, _: VertexId, d: VertexId, _: EdgeId, p: &BfsData) -> bool {
        p.labels.compare_exchange(d as usize, UNREACHED, self.depth + 1).is_ok()
    }

    fn apply_edge(&self, s: VertexId, d: VertexId, _: EdgeId, p: &BfsData) {
        p.preds.set(d as usize, s);
    }
}

/// Discovery by plain stores that any number of parents may repeat.
struct RacyDiscover {
    depth: u32,
}

impl Functor<BfsData> for RacyDiscover {
    fn cond_edge(&self, _: VertexId, d: VertexId, _: EdgeId, p: &BfsData) -> bool {
        !p.visited.get(d)
    }

    fn apply_edge(&self, s: VertexId, d: VertexId, _: EdgeId, p: &BfsData) {
        p.labels.set(d as usize, self.depth + 1);
        p.preds.set(d as usize, s);
    }

    fn cond_vertex(&self, v: VertexId, p: &BfsData) -> bool {
        !p.visited.test_and_set(v)
    }
}

/// Keeps each newly discovered vertex once and marks it visited.
struct MarkVisited;

impl Functor<BfsData> for MarkVisited {
    fn cond_vertex(&self, v: VertexId, p: &BfsData) -> bool {
        !p.visited.test_and_set(v)
    }
}

pub fn bfs<W: Weight>(g: &CsrGraph<W>, source: VertexId, opts: &BfsOptions) -> Result<BfsProblem> {
    check_source(g, source)?;
    opts.params.validate()?;
    let n = g.num_vertices();
    let en = Enactor::with_params(g, opts.params);
    let data = BfsData { labels: AtomicArray::new(n, UNREACHED), preds: AtomicArray::new(n, NO_PRED), visited: VisitedBitmap::new(n) };
    data.labels.set(source as usize, 0);
    data.visited.test_and_set(source);

    let cfg = AdvanceConfig::default().with_strategy(opts.strategy).with_idempotent(opts.idempotent);
    let mut culling = opts.idempotent.then(|| CullingState::new(n));
    let mut stats = BfsStats::default();
    let mut frontier = Frontier::vertices(vec![source]);
    let mut depth = 0u32;
    while !frontier.is_empty() {
        let direction = decide_direction(frontier.len(), data.visited.unset_count(), opts.direction);
        stats.directions.push(direction);
        stats.frontier_sizes.push(frontier.len());
        let discovered = match direction {
            Direction::Pull => pull_advance(&en, &data.visited, &data, &ClaimDiscover { depth }),
            Direction::Push => match culling.as_mut() {
                Some(state) => {
                    let raw = advance(&en, &frontier, &data, &RacyDiscover { depth }, &cfg)?;
                    idempotent_dedupe(&raw, state)
                }
                None => advance(&en, &frontier, &data, &ClaimDiscover { depth }, &cfg)?,
            },
        };
        frontier = match (direction, opts.idempotent) {
            (Direction::Push, true) => filter(&en, &discovered, &data, &RacyDiscover { depth }),
            _ => filter(&en, &discovered, &data, &MarkVisited),
        };
        depth += 1;
    }
    stats.run = RunStats { iterations: depth as usize, edges_inspected: en.edges_inspected() };
    Ok(BfsProblem { labels: data.labels.to_vec(), preds: data.preds.to_vec(), stats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_csr, to_undirected, EdgeList};

    fn g1_undirected() -> CsrGraph {
        build_csr(&to_undirected(&EdgeList::<u32>::new(4, vec![(0, 1), (0, 2), (1, 3), (2, 3)]))).unwrap()
    }

    fn all_options() -> Vec<BfsOptions> {
        let mut out = Vec::new();
        for strategy in StrategyChoice::ALL_FIXED {
            for direction in DirectionMode::ALL {
                for idempotent in [false, true] {
                    out.push(BfsOptions { direction, idempotent, strategy, ..Default::default() });
                }
            }
        }
        out
    }

    #[test]
    fn g1_labels_every_configuration() {
        let g = g1_undirected();
        for opts in all_options() {
            let p = bfs(&g, 0, &opts).unwrap();
            assert_eq!(p.labels, vec![0, 1, 1, 2], "{opts:?}");
            assert_eq!(p.preds[0], NO_PRED);
            assert!([1, 2].contains(&p.preds[3]));
        }
    }

    #[test]
    fn single_vertex() {
        let g = build_csr(&EdgeList::<u32>::new(1, vec![])).unwrap();
        let p = bfs(&g, 0, &BfsOptions::default()).unwrap();
        assert_eq!(p.labels, vec![0]);
        assert_eq!(p.stats.run.iterations, 1);
    }

    #[test]
    fn disconnected_vertex_unreached() {
        let g = build_csr(&EdgeList::<u32>::new(3, vec![(0, 1), (1, 0)])).unwrap();
        for opts in all_options() {
            let p = bfs(&g, 0, &opts).unwrap();
            assert_eq!(p.labels, vec![0, 1, UNREACHED]);
            assert_eq!(p.preds[2], NO_PRED);
        }
    }

    #[test]
    fn directed_edges_respected() {
        let g = build_csr(&EdgeList::<u32>::new(3, vec![(1, 0), (1, 2)])).unwrap();
        for opts in all_options() {
            assert_eq!(bfs(&g, 0, &opts).unwrap().labels, vec![0, UNREACHED, UNREACHED]);
            assert_eq!(bfs(&g, 1, &opts).unwrap().labels, vec![1, 0, 1]);
        }
    }

    #[test]
    fn invalid_source() {
        assert!(matches!(bfs(&g1_undirected(), 4, &BfsOptions::default()), Err(crate::Error::Usage(_))));
    }

    #[test]
    fn non_idempotent_push_inspects_each_reached_list_once() {
        let g = g1_undirected();
        let p = bfs(&g, 0, &BfsOptions::default()).unwrap();
        assert_eq!(p.stats.run.edges_inspected, g.num_edges() as u64);
        assert!(p.stats.directions.iter().all(|&d| d == Direction::Push));
    }
}
