//! Mapping irregular frontier work onto parallel workers.
//!
//! Three strategies split the neighbor lists of a vertex frontier into
//! chunks:
//!
//! - [`Strategy::PerElement`]: one chunk per frontier vertex.
//! - [`Strategy::SizeClassGrouping`]: vertices are bucketed by degree into
//!   large (`> medium_max`), medium (`> small_max`) and small lists. Large
//!   lists are split across workers, medium lists get a worker each and
//!   small lists are batched. Buckets run large first.
//! - [`Strategy::BalancedPartition`]: an exclusive scan of frontier degrees
//!   gives every edge a global offset; the offset range is cut into
//!   `chunk_size` pieces and the owner of each chunk start is found by a
//!   sorted search into the scan. With [`Granularity::Node`] chunk starts are
//!   rounded down to whole neighbor lists.
//!
//! Every strategy visits each edge of the frontier exactly once. Per-chunk
//! accumulators come back in chunk order, so the concatenated output is
//! independent of the number of worker threads.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::CsrGraph;
use crate::scalar::Weight;
use crate::{EdgeId, Frontier, VertexId};

pub const DEFAULT_SMALL_MAX: usize = 32;
pub const DEFAULT_MEDIUM_MAX: usize = 256;
pub const DEFAULT_CHUNK_SIZE: usize = 256;
pub const DEFAULT_THRESHOLD: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LoadBalanceParams {
    pub small_max: usize,
    pub medium_max: usize,
    pub chunk_size: usize,
    /// Frontier size at which balanced partitioning switches from node to edge granularity.
    pub threshold: usize,
}

impl Default for LoadBalanceParams {
    fn default() -> Self {
        Self {
            small_max: DEFAULT_SMALL_MAX,
            medium_max: DEFAULT_MEDIUM_MAX,
            chunk_size: DEFAULT_CHUNK_SIZE,
            threshold: DEFAULT_THRESHOLD,
        }
    }
}

impl LoadBalanceParams {
    pub fn validate(&self) -> Result<()> {
        if self.small_max >= self.medium_max {
            return Err(Error::Usage(format!(
                "small_max ({}) must be below medium_max ({})",
                self.small_max, self.medium_max
            )));
        }
        if self.chunk_size == 0 {
            return Err(Error::Usage("chunk_size must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Granularity {
    /// Chunk boundaries fall on neighbor-list boundaries.
    Node,
    /// Chunks hold exactly `chunk_size` edges; lists may be split.
    Edge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    PerElement,
    SizeClassGrouping { small_max: usize, medium_max: usize },
    BalancedPartition { chunk_size: usize, granularity: Granularity },
}

/// User-facing strategy selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StrategyChoice {
    #[default]
    Auto,
    PerElement,
    SizeClass,
    Balanced,
}

impl StrategyChoice {
    pub const ALL_FIXED: [StrategyChoice; 3] = [StrategyChoice::PerElement, StrategyChoice::SizeClass, StrategyChoice::Balanced];
}

impl fmt::Display for StrategyChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StrategyChoice::Auto => "auto",
            StrategyChoice::PerElement => "per-element",
            StrategyChoice::SizeClass => "size-class",
            StrategyChoice::Balanced => "balanced",
        })
    }
}

impl FromStr for StrategyChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(StrategyChoice::Auto),
            "per-element" => Ok(StrategyChoice::PerElement),
            "size-class" => Ok(StrategyChoice::SizeClass),
            "balanced" => Ok(StrategyChoice::Balanced),
            other => Err(Error::Usage(format!("unknown strategy {other:?}"))),
        }
    }
}

fn balanced(frontier_len: usize, params: &LoadBalanceParams) -> Strategy {
    let granularity = if frontier_len < params.threshold { Granularity::Node } else { Granularity::Edge };
    Strategy::BalancedPartition { chunk_size: params.chunk_size, granularity }
}

/// Pure selection rule: size-class grouping when no frontier vertex has more
/// than `medium_max` neighbors, balanced partitioning otherwise.
pub fn select_strategy_for(frontier_len: usize, frontier_max_degree: usize, params: &LoadBalanceParams) -> Strategy {
    if frontier_max_degree <= params.medium_max {
        Strategy::SizeClassGrouping { small_max: params.small_max, medium_max: params.medium_max }
    } else {
        balanced(frontier_len, params)
    }
}

/// Largest out-degree among `vertices`, 0 when empty.
pub fn frontier_max_degree<W: Weight>(g: &CsrGraph<W>, vertices: &[VertexId]) -> usize {
    vertices.par_iter().with_min_len(4096).map(|&v| g.degree(v)).max().unwrap_or(0)
}

pub fn select_strategy<W: Weight>(f: &Frontier, g: &CsrGraph<W>, params: &LoadBalanceParams) -> Strategy {
    let sources: Vec<VertexId> = match f.kind() {
        crate::FrontierKind::Vertex => return select_strategy_for(f.len(), frontier_max_degree(g, f.items()), params),
        crate::FrontierKind::Edge => f.items().iter().map(|&e| g.edge_dst(e)).collect(),
    };
    select_strategy_for(sources.len(), frontier_max_degree(g, &sources), params)
}

/// Concrete strategy for expanding the lists of `sources`.
pub fn resolve_strategy<W: Weight>(choice: StrategyChoice, sources: &[VertexId], g: &CsrGraph<W>, params: &LoadBalanceParams) -> Strategy {
    let frontier_len = sources.len();
    match choice {
        StrategyChoice::Auto => select_strategy_for(frontier_len, frontier_max_degree(g, sources), params),
        StrategyChoice::PerElement => Strategy::PerElement,
        StrategyChoice::SizeClass => Strategy::SizeClassGrouping { small_max: params.small_max, medium_max: params.medium_max },
        StrategyChoice::Balanced => balanced(frontier_len, params),
    }
}

const SCAN_BLOCK: usize = 1 << 14;

/// Exclusive prefix sum with the grand total appended (length `values.len() + 1`).
pub fn exclusive_scan(values: &[usize]) -> Vec<usize> {
    let mut out = vec![0usize; values.len() + 1];
    if values.len() <= SCAN_BLOCK {
        for (i, v) in values.iter().enumerate() {
            out[i + 1] = out[i] + v;
        }
        return out;
    }
    let block_sums: Vec<usize> = values.par_chunks(SCAN_BLOCK).map(|c| c.iter().sum()).collect();
    let mut block_offsets = Vec::with_capacity(block_sums.len());
    let mut running = 0;
    for s in &block_sums {
        block_offsets.push(running);
        running += s;
    }
    out[1..]
        .par_chunks_mut(SCAN_BLOCK)
        .zip(values.par_chunks(SCAN_BLOCK))
        .zip(block_offsets.par_iter())
        .for_each(|((dst, src), &offset)| {
            let mut acc = offset;
            for (d, v) in dst.iter_mut().zip(src) {
                acc += v;
                *d = acc;
            }
        });
    out
}

/// A load-balanced division of a vertex frontier's edges into chunks.
///
/// Chunk `i` covers global edge offsets `chunk_starts[i]..chunk_starts[i + 1]`
/// (the last one ends at `total_edges`). Offsets index the concatenation of
/// the frontier's neighbor lists, as laid out by `degree_prefix`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorkPlan {
    sources: Vec<VertexId>,
    pub total_edges: usize,
    /// Exclusive scan of frontier degrees; the last entry is `total_edges`.
    pub degree_prefix: Vec<usize>,
    pub chunk_starts: Vec<usize>,
    /// Vertex whose neighbor list contains each chunk's first edge.
    pub source_of_chunk_start: Vec<VertexId>,
    chunk_owner: Vec<usize>,
}

impl WorkPlan {
    fn from_chunks(sources: Vec<VertexId>, degree_prefix: Vec<usize>, chunk_starts: Vec<usize>, chunk_owner: Vec<usize>) -> Self {
        let total_edges = *degree_prefix.last().unwrap_or(&0);
        let source_of_chunk_start = chunk_owner.iter().map(|&q| sources[q]).collect();
        Self { sources, total_edges, degree_prefix, chunk_starts, source_of_chunk_start, chunk_owner }
    }

    pub fn num_chunks(&self) -> usize {
        self.chunk_starts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chunk_starts.is_empty()
    }

    /// `(start, end)` global edge offsets of chunk `i`.
    pub fn chunk_bounds(&self, i: usize) -> (usize, usize) {
        let end = self.chunk_starts.get(i + 1).copied().unwrap_or(self.total_edges);
        (self.chunk_starts[i], end)
    }

    pub fn chunk_len(&self, i: usize) -> usize {
        let (s, e) = self.chunk_bounds(i);
        e - s
    }

    /// The frontier vertices this plan was built for.
    pub fn sources(&self) -> &[VertexId] {
        &self.sources
    }
}

fn degrees_prefix<W: Weight>(g: &CsrGraph<W>, vertices: &[VertexId]) -> Vec<usize> {
    let degrees: Vec<usize> = vertices.par_iter().map(|&v| g.degree(v)).collect();
    exclusive_scan(&degrees)
}

/// Frontier position owning global edge offset `offset` (requires `offset < total`).
#[inline]
fn owner_of(prefix: &[usize], offset: usize) -> usize {
    prefix.partition_point(|&p| p <= offset) - 1
}

pub fn plan_per_element<W: Weight>(g: &CsrGraph<W>, vertices: &[VertexId]) -> WorkPlan {
    let prefix = degrees_prefix(g, vertices);
    let starts = prefix[..vertices.len()].to_vec();
    let owners = (0..vertices.len()).collect();
    WorkPlan::from_chunks(vertices.to_vec(), prefix, starts, owners)
}

pub fn plan_balanced_partition<W: Weight>(
    g: &CsrGraph<W>,
    vertices: &[VertexId],
    chunk_size: usize,
    granularity: Granularity,
) -> WorkPlan {
    assert!(chunk_size >= 1, "chunk_size must be positive");
    let prefix = degrees_prefix(g, vertices);
    let total = *prefix.last().unwrap();
    let cut_points: Vec<usize> = (0..total.div_ceil(chunk_size)).map(|k| k * chunk_size).collect();
    let owners: Vec<usize> = cut_points.par_iter().map(|&o| owner_of(&prefix, o)).collect();
    let (starts, owners) = match granularity {
        Granularity::Edge => (cut_points, owners),
        Granularity::Node => {
            let mut owners = owners;
            owners.dedup();
            (owners.iter().map(|&q| prefix[q]).collect(), owners)
        }
    };
    WorkPlan::from_chunks(vertices.to_vec(), prefix, starts, owners)
}

/// Frontier vertices bucketed by neighbor-list size, each bucket in frontier order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SizeClassBuckets {
    pub large: Vec<VertexId>,
    pub medium: Vec<VertexId>,
    pub small: Vec<VertexId>,
}

pub fn plan_size_classes<W: Weight>(g: &CsrGraph<W>, vertices: &[VertexId], small_max: usize, medium_max: usize) -> SizeClassBuckets {
    let pick = |lo: usize, hi: usize| -> Vec<VertexId> {
        vertices
            .par_iter()
            .copied()
            .filter(|&v| {
                let d = g.degree(v);
                d > lo && d <= hi
            })
            .collect()
    };
    SizeClassBuckets {
        large: pick(medium_max, usize::MAX),
        medium: pick(small_max, medium_max),
        small: vertices.par_iter().copied().filter(|&v| g.degree(v) <= small_max).collect(),
    }
}

fn visit_chunk<W, T, V>(plan: &WorkPlan, g: &CsrGraph<W>, chunk: usize, acc: &mut T, visit: &V)
where
    W: Weight,
    V: Fn(&mut T, VertexId, VertexId, EdgeId),
{
    let (start, end) = plan.chunk_bounds(chunk);
    let prefix = &plan.degree_prefix;
    let offsets = g.row_offsets();
    let cols = g.column_indices();
    let mut q = plan.chunk_owner[chunk];
    let mut o = start;
    while o < end {
        while prefix[q + 1] <= o {
            q += 1;
        }
        let u = plan.sources[q];
        let base = offsets[u as usize] + (o - prefix[q]);
        let stop = end.min(prefix[q + 1]);
        for (i, &dst) in cols[base..base + (stop - o)].iter().enumerate() {
            visit(acc, u, dst, (base + i) as EdgeId);
        }
        o = stop;
    }
}

/// Run `visit(acc, src, dst, edge)` over every edge covered by `plan`.
///
/// Chunks are processed by rayon workers; each worker folds a contiguous
/// run of chunks into one accumulator from `init`, and the accumulators are
/// returned in chunk order.
pub fn execute_plan<W, T, I, V>(plan: &WorkPlan, g: &CsrGraph<W>, init: I, visit: V) -> Vec<T>
where
    W: Weight,
    T: Send,
    I: Fn() -> T + Sync + Send,
    V: Fn(&mut T, VertexId, VertexId, EdgeId) + Sync + Send,
{
    let chunks = plan.num_chunks();
    if chunks == 0 {
        return Vec::new();
    }
    let min_len = (chunks / (rayon::current_num_threads() * 16)).max(1);
    (0..chunks)
        .into_par_iter()
        .with_min_len(min_len)
        .fold(&init, |mut acc, c| {
            visit_chunk(plan, g, c, &mut acc, &visit);
            acc
        })
        .collect()
}

/// Expand the neighbor lists of `vertices` under `strategy`.
pub fn for_each_edge<W, T, I, V>(g: &CsrGraph<W>, vertices: &[VertexId], strategy: Strategy, init: I, visit: V) -> Vec<T>
where
    W: Weight,
    T: Send,
    I: Fn() -> T + Sync + Send,
    V: Fn(&mut T, VertexId, VertexId, EdgeId) + Sync + Send,
{
    match strategy {
        Strategy::PerElement => execute_plan(&plan_per_element(g, vertices), g, init, visit),
        Strategy::BalancedPartition { chunk_size, granularity } => {
            execute_plan(&plan_balanced_partition(g, vertices, chunk_size, granularity), g, init, visit)
        }
        Strategy::SizeClassGrouping { small_max, medium_max } => {
            let buckets = plan_size_classes(g, vertices, small_max, medium_max);
            let mut out = Vec::new();
            if !buckets.large.is_empty() {
                let plan = plan_balanced_partition(g, &buckets.large, medium_max, Granularity::Edge);
                out.extend(execute_plan(&plan, g, &init, &visit));
            }
            if !buckets.medium.is_empty() {
                out.extend(execute_plan(&plan_per_element(g, &buckets.medium), g, &init, &visit));
            }
            if !buckets.small.is_empty() {
                out.extend(execute_plan(&plan_per_element(g, &buckets.small), g, &init, &visit));
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_csr, generate_synthetic, EdgeList, SyntheticKind};
    use std::sync::atomic::{AtomicUsize, Ordering};

    fn g1() -> CsrGraph {
        build_csr(&EdgeList::new(4, vec![(0, 1), (0, 2), (1, 3), (2, 3)])).unwrap()
    }

    fn star(leaves: u32) -> CsrGraph {
        build_csr(&EdgeList::new(leaves as usize + 1, (1..=leaves).map(|l| (0, l)).collect())).unwrap()
    }

    fn count_visits(plan: &WorkPlan, g: &CsrGraph) -> usize {
        let calls = AtomicUsize::new(0);
        execute_plan(plan, g, || (), |_, _, _, _| {
            calls.fetch_add(1, Ordering::Relaxed);
        });
        calls.into_inner()
    }

    #[test]
    fn per_element_chunks() {
        let g = g1();
        let plan = plan_per_element(&g, &[0, 1]);
        assert_eq!(plan.num_chunks(), 2);
        assert_eq!(plan.chunk_bounds(0), (0, 2));
        assert_eq!(plan.chunk_bounds(1), (2, 3));
        assert_eq!(plan.source_of_chunk_start, vec![0, 1]);

        assert!(plan_per_element(&g, &[]).is_empty());

        let zero = plan_per_element(&g, &[3]);
        assert_eq!(zero.num_chunks(), 1);
        assert_eq!(zero.chunk_len(0), 0);
        assert_eq!(count_visits(&zero, &g), 0);
    }

    #[test]
    fn size_class_buckets() {
        // Degrees 2, 40 and 300 on vertices 0, 1, 2.
        let mut edges = Vec::new();
        for (v, d) in [(0u32, 2u32), (1, 40), (2, 300)] {
            edges.extend((0..d).map(|i| (v, 3 + i)));
        }
        let g = build_csr(&EdgeList::<u32>::new(400, edges)).unwrap();
        let b = plan_size_classes(&g, &[0, 1, 2], 32, 256);
        assert_eq!((b.small, b.medium, b.large), (vec![0], vec![1], vec![2]));

        let b = plan_size_classes(&g, &[5, 6], 32, 256);
        assert_eq!(b.small, vec![5, 6]);
        assert!(b.medium.is_empty() && b.large.is_empty());
    }

    #[test]
    fn size_class_boundary_is_inclusive() {
        let g = star(32);
        let b = plan_size_classes(&g, &[0], 32, 256);
        assert_eq!(b.small, vec![0]);
    }

    // Expected values from a brute-force oracle: walk the concatenated
    // neighbor lists edge by edge and record the owner at each multiple of
    // chunk_size.
    #[test]
    fn balanced_partition_matches_brute_force() {
        let g = g1();
        let plan = plan_balanced_partition(&g, &[0, 1, 2, 3], 2, Granularity::Edge);
        assert_eq!(plan.degree_prefix, vec![0, 2, 3, 4, 4]);
        assert_eq!(plan.chunk_starts, vec![0, 2]);
        assert_eq!(plan.source_of_chunk_start, vec![0, 1]);

        let vertices = [0u32, 1, 2, 3];
        let mut owner_at = Vec::new();
        for (pos, &v) in vertices.iter().enumerate() {
            owner_at.extend(std::iter::repeat_n(pos, g.degree(v)));
        }
        let expected: Vec<u32> = owner_at.iter().step_by(2).map(|&p| vertices[p]).collect();
        assert_eq!(plan.source_of_chunk_start, expected);
    }

    #[test]
    fn balanced_partition_splits_long_list() {
        let g = star(10);
        let plan = plan_balanced_partition(&g, &[0], 4, Granularity::Edge);
        assert_eq!(plan.chunk_starts, vec![0, 4, 8]);
        assert_eq!(plan.source_of_chunk_start, vec![0, 0, 0]);
        assert_eq!(count_visits(&plan, &g), 10);
        assert!(plan_balanced_partition(&g, &[], 4, Granularity::Edge).is_empty());
    }

    #[test]
    fn node_granularity_keeps_lists_whole() {
        let g = star(10);
        let plan = plan_balanced_partition(&g, &[0, 1, 2], 4, Granularity::Node);
        assert_eq!(plan.chunk_starts, vec![0]);
        assert_eq!(plan.chunk_len(0), 10);
        assert_eq!(count_visits(&plan, &g), 10);
    }

    #[test]
    fn full_frontier_visits_every_edge_once() {
        let g = g1();
        for plan in [
            plan_per_element(&g, &[0, 1, 2, 3]),
            plan_balanced_partition(&g, &[0, 1, 2, 3], 1, Granularity::Edge),
            plan_balanced_partition(&g, &[0, 1, 2, 3], 3, Granularity::Node),
        ] {
            assert_eq!(count_visits(&plan, &g), 4);
        }
    }

    #[test]
    fn strategy_selection() {
        let params = LoadBalanceParams::default();
        let grid = build_csr(&generate_synthetic::<u32>(SyntheticKind::Grid { rows: 10, cols: 10 }, 0).unwrap()).unwrap();
        let f = Frontier::all_vertices(100);
        assert!(matches!(select_strategy(&f, &grid, &params), Strategy::SizeClassGrouping { small_max: 32, medium_max: 256 }));
        assert_eq!(frontier_max_degree(&grid, &[]), 0);

        let sf = build_csr(&generate_synthetic::<u32>(SyntheticKind::scale_free(20_000), 1).unwrap()).unwrap();
        assert!(sf.max_degree() > 256);
        let big = Frontier::vertices((0..10_000).collect());
        assert_eq!(
            select_strategy(&big, &sf, &params),
            Strategy::BalancedPartition { chunk_size: 256, granularity: Granularity::Edge }
        );
        let small = Frontier::vertices((0..100).collect());
        assert_eq!(
            select_strategy(&small, &sf, &params),
            Strategy::BalancedPartition { chunk_size: 256, granularity: Granularity::Node }
        );
        let leaves: Vec<u32> = (0..20_000).filter(|&v| sf.degree(v) <= 256).take(5_000).collect();
        assert!(matches!(select_strategy(&Frontier::vertices(leaves), &sf, &params), Strategy::SizeClassGrouping { .. }));
    }

    #[test]
    fn scan_matches_serial_on_large_input() {
        let values: Vec<usize> = (0..100_000).map(|i| (i * 31) % 17).collect();
        let scan = exclusive_scan(&values);
        let mut acc = 0;
        for (i, v) in values.iter().enumerate() {
            assert_eq!(scan[i], acc);
            acc += v;
        }
        assert_eq!(*scan.last().unwrap(), acc);
    }

    #[test]
    fn params_validation() {
        assert!(LoadBalanceParams::default().validate().is_ok());
        assert!(LoadBalanceParams { small_max: 256, ..Default::default() }.validate().is_err());
        assert!(LoadBalanceParams { chunk_size: 0, ..Default::default() }.validate().is_err());
        assert_eq!("size-class".parse::<StrategyChoice>().unwrap(), StrategyChoice::SizeClass);
        assert!("warp".parse::<StrategyChoice>().is_err());
    }
}
