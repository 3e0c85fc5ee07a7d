//! Frontier-centric bulk-synchronous graph analytics on multicore CPUs.
//!
//! Every algorithm is a loop of three operators over an explicit
//! [`Frontier`]: [`advance`] visits neighbors, [`filter`] keeps a subset,
//! [`compute`] applies a function to each element. User logic is supplied
//! as a [`Functor`] whose conditions and updates run inside the operator's
//! single pass over its assigned work.
//!
//! Numeric code is generic over the scalar type: edge weights and path
//! labels over [`Weight`] (unsigned integers), ranks and centrality scores
//! over [`Real`] (`f32`/`f64`). The aliases at the crate root pick the
//! usual concrete types.

pub mod atomic;
pub mod error;
pub mod frontier;
pub mod graph;
pub mod load_balance;
pub mod operators;
pub mod optimizations;
pub mod primitives;
pub mod scalar;

pub use atomic::{AtomicArray, FixedAddArray};
pub use error::{Error, Result};
pub use frontier::{Frontier, FrontierKind};
pub use graph::{build_csr, CsrGraph, EdgeList};
pub use operators::{advance, compute, filter, AdvanceConfig, Enactor, Functor};
pub use primitives::{bc, bfs, cc, pagerank, sssp};
pub use scalar::{AtomicScalar, Real, Weight};

pub type VertexId = u32;
pub type EdgeId = u32;

/// Graph with 32-bit integer edge weights.
pub type Graph = CsrGraph<u32>;
/// Edge list with 32-bit integer edge weights.
pub type Edges = EdgeList<u32>;
pub type SsspProblem32 = primitives::SsspProblem<u32>;
pub type SsspProblem64 = primitives::SsspProblem<u64>;
pub type BcProblem64 = primitives::BcProblem<f64>;
pub type BcProblem32 = primitives::BcProblem<f32>;
pub type PrProblem64 = primitives::PrProblem<f64>;
pub type PrProblem32 = primitives::PrProblem<f32>;
