//! Comparison of primitive results against the serial oracles.

use frontier_core::{Graph, VertexId};

use crate::oracle;
use crate::report::Validation;
use crate::run::Outcome;

/// Largest edge count the serial oracles are run on.
pub const MAX_ORACLE_EDGES: usize = 10_000_000;
/// Largest vertex count for all-sources betweenness validation.
pub const MAX_BC_ALL_VERTICES: usize = 1_000;
/// Relative tolerance for betweenness scores.
pub const BC_RELATIVE_TOLERANCE: f64 = 1e-9;

fn first_mismatch<T: PartialEq + std::fmt::Debug>(got: &[T], want: &[T], what: &str) -> Validation {
    match got.iter().zip(want).position(|(a, b)| a != b) {
        Some(v) => Validation::Failed { detail: format!("{what} of vertex {v}: got {:?}, expected {:?}", got[v], want[v]) },
        None if got.len() != want.len() => Validation::Failed { detail: format!("{what}: length {} vs {}", got.len(), want.len()) },
        None => Validation::Passed,
    }
}

/// Checks `outcome` against the matching oracle, skipping graphs too large
/// for a serial run.
pub fn validate(g: &Graph, outcome: &Outcome, source: Option<VertexId>, bc_sources: &[VertexId], damping: f64, epsilon: f64) -> Validation {
    if g.num_edges() > MAX_ORACLE_EDGES {
        return Validation::Skipped { reason: format!("{} edges exceed the oracle limit of {MAX_ORACLE_EDGES}", g.num_edges()) };
    }
    match outcome {
        Outcome::Bfs(p) => first_mismatch(&p.labels, &oracle::bfs(g, source.expect("bfs has a source")), "depth"),
        Outcome::Sssp(p) => first_mismatch(&p.labels, &oracle::dijkstra(g, source.expect("sssp has a source")), "distance"),
        Outcome::Cc(p) => first_mismatch(&p.component, &oracle::union_find(g), "component"),
        Outcome::Bc(p) => {
            if bc_sources.len() > 1 && g.num_vertices() > MAX_BC_ALL_VERTICES {
                return Validation::Skipped {
                    reason: format!("{} vertices exceed the all-sources limit of {MAX_BC_ALL_VERTICES}", g.num_vertices()),
                };
            }
            let want = oracle::brandes(g, bc_sources);
            for (v, (&a, &b)) in p.bc.iter().zip(&want).enumerate() {
                if (a - b).abs() > BC_RELATIVE_TOLERANCE * b.abs().max(1.0) {
                    return Validation::Failed { detail: format!("centrality of vertex {v}: got {a}, expected {b}") };
                }
            }
            Validation::Passed
        }
        Outcome::Pagerank(p) => {
            let want = oracle::power_iteration(g, damping, (epsilon * 1e-4).max(1e-13), 100_000);
            let l1: f64 = p.rank.iter().zip(&want).map(|(a, b)| (a - b).abs()).sum();
            if l1 <= 10.0 * epsilon {
                Validation::Passed
            } else {
                let worst = (0..want.len()).max_by(|&a, &b| (p.rank[a] - want[a]).abs().total_cmp(&(p.rank[b] - want[b]).abs())).unwrap_or(0);
                Validation::Failed { detail: format!("L1 distance {l1:e} exceeds {:e}; worst vertex {worst}", 10.0 * epsilon) }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use frontier_core::graph::to_undirected;
    use frontier_core::primitives::{BfsOptions, CcOptions};
    use frontier_core::{bfs, build_csr, cc, Edges};

    fn g1() -> Graph {
        build_csr(&to_undirected(&Edges::new(4, vec![(0, 1), (0, 2), (1, 3), (2, 3)]))).unwrap()
    }

    #[test]
    fn correct_bfs_passes() {
        let g = g1();
        let p = bfs(&g, 0, &BfsOptions::default()).unwrap();
        assert_eq!(validate(&g, &Outcome::Bfs(p), Some(0), &[], 0.85, 1e-6), Validation::Passed);
    }

    #[test]
    fn corrupted_bfs_names_the_vertex() {
        let g = g1();
        let mut p = bfs(&g, 0, &BfsOptions::default()).unwrap();
        p.labels[3] = 7;
        match validate(&g, &Outcome::Bfs(p), Some(0), &[], 0.85, 1e-6) {
            Validation::Failed { detail } => assert!(detail.contains("vertex 3"), "{detail}"),
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn cc_validated() {
        let g = g1();
        let p = cc(&g, &CcOptions::default()).unwrap();
        assert_eq!(validate(&g, &Outcome::Cc(p), None, &[], 0.85, 1e-6), Validation::Passed);
    }
}
