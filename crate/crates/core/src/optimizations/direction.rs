use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::VisitedBitmap;
use crate::error::{Error, Result};
use crate::operators::{Enactor, Functor};
use crate::scalar::Weight;
use crate::{Frontier, VertexId};

/// Traversal direction of a single step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Push,
    Pull,
}

/// Requested direction policy for a traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DirectionMode {
    #[default]
    Push,
    Pull,
    Auto,
}

impl DirectionMode {
    pub const ALL: [DirectionMode; 3] = [DirectionMode::Push, DirectionMode::Pull, DirectionMode::Auto];
}

impl fmt::Display for DirectionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DirectionMode::Push => "push",
            DirectionMode::Pull => "pull",
            DirectionMode::Auto => "auto",
        })
    }
}

impl FromStr for DirectionMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "push" => Ok(DirectionMode::Push),
            "pull" => Ok(DirectionMode::Pull),
            "auto" => Ok(DirectionMode::Auto),
            other => Err(Error::Usage(format!("unknown direction {other:?}"))),
        }
    }
}

/// Pull once fewer vertices remain unvisited than the frontier holds.
pub fn decide_direction(frontier_size: usize, unvisited_count: usize, mode: DirectionMode) -> Direction {
    match mode {
        DirectionMode::Push => Direction::Push,
        DirectionMode::Pull => Direction::Pull,
        DirectionMode::Auto if unvisited_count < frontier_size => Direction::Pull,
        DirectionMode::Auto => Direction::Push,
    }
}

/// One pull step: every vertex not set in `visited` scans its in-neighbors
/// and joins the output on the first neighbor that is set in `visited` and
/// passes `cond_edge(neighbor, vertex, ..)`. `apply_edge` fires for that
/// edge only and the scan of the list stops there.
///
/// `visited` is read, not written; the caller marks the returned vertices
/// before the next step. Edge ids passed to the functor index the graph's
/// in-neighbor CSR ([`CsrGraph::pull_graph`](crate::CsrGraph::pull_graph)),
/// which carries the forward weights.
pub fn pull_advance<W, P, F>(en: &Enactor<'_, W>, visited: &VisitedBitmap, data: &P, fs: &F) -> Frontier
where
    W: Weight,
    P: Sync + ?Sized,
    F: Functor<P>,
{
    let pg = en.graph().pull_graph();
    let n = pg.num_vertices() as VertexId;
    let parts: Vec<(Vec<VertexId>, u64)> = (0..n)
        .into_par_iter()
        .with_min_len(256)
        .fold(
            || (Vec::new(), 0u64),
            |mut acc, u| {
                if visited.get(u) {
                    return acc;
                }
                let first = pg.edge_range(u).start;
                for (i, &nb) in pg.neighbors(u).iter().enumerate() {
                    acc.1 += 1;
                    let e = (first + i) as u32;
                    if visited.get(nb) && fs.cond_edge(nb, u, e, data) {
                        fs.apply_edge(nb, u, e, data);
                        acc.0.push(u);
                        break;
                    }
                }
                acc
            },
        )
        .collect();
    let mut items = Vec::with_capacity(parts.iter().map(|p| p.0.len()).sum());
    let mut inspected = 0;
    for (part, count) in parts {
        items.extend(part);
        inspected += count;
    }
    en.add_inspected(inspected);
    Frontier::vertices(items)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atomic::AtomicArray;
    use crate::graph::{build_csr, to_undirected, EdgeList};
    use crate::operators::{advance, AcceptAll, AdvanceConfig};
    use crate::EdgeId;

    #[test]
    fn switch_rule() {
        assert_eq!(decide_direction(100, 50, DirectionMode::Auto), Direction::Pull);
        assert_eq!(decide_direction(100, 5000, DirectionMode::Auto), Direction::Push);
        assert_eq!(decide_direction(100, 100, DirectionMode::Auto), Direction::Push);
        assert_eq!(decide_direction(100, 1, DirectionMode::Push), Direction::Push);
        assert_eq!(decide_direction(1, 100, DirectionMode::Pull), Direction::Pull);
    }

    struct Label {
        depth: u32,
    }

    impl Functor<AtomicArray<u32>> for Label {
        fn cond_edge(&self, _: VertexId, d: VertexId, _: EdgeId, labels: &AtomicArray<u32>) -> bool {
            labels.compare_exchange(d as usize, u32::MAX, self.depth + 1).is_ok()
        }
    }

    fn g1_undirected() -> crate::CsrGraph {
        build_csr(&to_undirected(&EdgeList::new(4, vec![(0, 1), (0, 2), (1, 3), (2, 3)]))).unwrap()
    }

    #[test]
    fn pull_matches_push_from_root() {
        let g = g1_undirected();
        let en = Enactor::new(&g);
        let visited = VisitedBitmap::from_frontier(&Frontier::vertices(vec![0]), 4);

        let push_labels = AtomicArray::from_vec(vec![0, u32::MAX, u32::MAX, u32::MAX]);
        let pushed = advance(&en, &Frontier::vertices(vec![0]), &push_labels, &Label { depth: 0 }, &AdvanceConfig::default()).unwrap();
        let pull_labels = AtomicArray::from_vec(vec![0, u32::MAX, u32::MAX, u32::MAX]);
        let pulled = pull_advance(&en, &visited, &pull_labels, &Label { depth: 0 });

        let mut a = pushed.into_items();
        a.sort_unstable();
        assert_eq!(a, vec![1, 2]);
        assert_eq!(pulled.into_items(), vec![1, 2]);
        assert_eq!(push_labels.to_vec(), pull_labels.to_vec());
    }

    #[test]
    fn pull_degenerate_bitmaps() {
        let g = g1_undirected();
        let en = Enactor::new(&g);
        let all = VisitedBitmap::from_frontier(&Frontier::all_vertices(4), 4);
        assert!(pull_advance(&en, &all, &(), &AcceptAll).is_empty());
        let none = VisitedBitmap::new(4);
        assert!(pull_advance(&en, &none, &(), &AcceptAll).is_empty());
    }

    #[test]
    fn pull_stops_at_first_hit() {
        // Vertex 3 has two visited in-neighbors; only one apply may fire.
        struct Count(std::sync::atomic::AtomicUsize);
        impl Functor<()> for Count {
            fn apply_edge(&self, _: VertexId, _: VertexId, _: EdgeId, _: &()) {
                self.0.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
            }
        }
        let g = g1_undirected();
        let en = Enactor::new(&g);
        let visited = VisitedBitmap::from_frontier(&Frontier::vertices(vec![0, 1, 2]), 4);
        let fs = Count(Default::default());
        assert_eq!(pull_advance(&en, &visited, &(), &fs).into_items(), vec![3]);
        assert_eq!(fs.0.into_inner(), 1);
        assert_eq!(en.edges_inspected(), 1);
    }

    #[test]
    fn pull_on_directed_graph_uses_in_neighbors() {
        let g: crate::CsrGraph = build_csr(&EdgeList::new(3, vec![(0, 1), (2, 0)])).unwrap();
        let en = Enactor::new(&g);
        let visited = VisitedBitmap::from_frontier(&Frontier::vertices(vec![0]), 3);
        assert_eq!(pull_advance(&en, &visited, &(), &AcceptAll).into_items(), vec![1]);
    }
}
