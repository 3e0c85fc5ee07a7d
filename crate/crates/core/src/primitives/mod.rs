//! The five graph primitives, each built only from the operators, the
//! load-balancing strategies and the traversal optimizations.

mod bc;
mod bfs;
mod cc;
mod pagerank;
mod sssp;

pub use bc::{bc, BcOptions, BcProblem, BcSources};
pub use bfs::{bfs, BfsOptions, BfsProblem, BfsStats};
pub use cc::{cc, CcOptions, CcProblem};
pub use pagerank::{pagerank, PrOptions, PrProblem, DEFAULT_DAMPING, DEFAULT_EPSILON, DEFAULT_MAX_ITERS};
pub use sssp::{default_delta, sssp, SsspOptions, SsspProblem};

use crate::error::{Error, Result};
use crate::graph::CsrGraph;
use crate::scalar::Weight;
use crate::VertexId;

/// Hop label of a vertex the traversal never reached.
pub const UNREACHED: u32 = u32::MAX;
/// Predecessor of the source and of unreached vertices.
pub const NO_PRED: VertexId = VertexId::MAX;

/// Work counters shared by every primitive run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunStats {
    /// Bulk-synchronous iterations executed.
    pub iterations: usize,
    /// Edges examined by advance and pull steps.
    pub edges_inspected: u64,
}

fn check_source<W: Weight>(g: &CsrGraph<W>, source: VertexId) -> Result<()> {
    if (source as usize) < g.num_vertices() {
        Ok(())
    } else {
        Err(Error::Usage(format!("source {source} out of range for {} vertices", g.num_vertices())))
    }
}
