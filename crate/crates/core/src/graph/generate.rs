//! Seeded synthetic graph generators.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::EdgeList;
use crate::error::{Error, Result};
use crate::scalar::Weight;
use crate::VertexId;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SyntheticKind {
    /// `m` distinct directed edges chosen uniformly among the `n(n-1)` non-loop pairs.
    UniformRandom { n: usize, m: usize },
    /// Preferential attachment: each new vertex links to `edges_per_vertex`
    /// distinct earlier vertices chosen with probability proportional to
    /// `degree + A`, where `A = (exponent - 3) * edges_per_vertex` gives a
    /// degree distribution with tail exponent `exponent` (3 is plain
    /// Barabasi-Albert). Output is symmetric.
    ScaleFree { n: usize, edges_per_vertex: usize, exponent: f64 },
    /// `rows x cols` 4-neighbor lattice, symmetric.
    Grid { rows: usize, cols: usize },
}

impl SyntheticKind {
    pub const DEFAULT_EDGES_PER_VERTEX: usize = 4;
    pub const DEFAULT_EXPONENT: f64 = 3.0;

    pub fn scale_free(n: usize) -> Self {
        SyntheticKind::ScaleFree { n, edges_per_vertex: Self::DEFAULT_EDGES_PER_VERTEX, exponent: Self::DEFAULT_EXPONENT }
    }
}

pub fn generate_synthetic<W: Weight>(kind: SyntheticKind, seed: u64) -> Result<EdgeList<W>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match kind {
        SyntheticKind::UniformRandom { n, m } => uniform_random(n, m, &mut rng),
        SyntheticKind::ScaleFree { n, edges_per_vertex, exponent } => scale_free(n, edges_per_vertex, exponent, &mut rng),
        SyntheticKind::Grid { rows, cols } => grid(rows, cols),
    }
}

fn check_ids(n: usize) -> Result<()> {
    if n >= u32::MAX as usize {
        return Err(Error::InvalidParams(format!("{n} vertices exceed 32-bit ids")));
    }
    Ok(())
}

/// Pair index `k` in `[0, n(n-1))` to the `k`-th non-loop ordered pair.
fn pair_from_index(k: u64, n: u64) -> (VertexId, VertexId) {
    let s = k / (n - 1);
    let r = k % (n - 1);
    let d = if r >= s { r + 1 } else { r };
    (s as VertexId, d as VertexId)
}

fn uniform_random<W: Weight>(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Result<EdgeList<W>> {
    check_ids(n)?;
    let total = (n as u64).saturating_mul((n as u64).saturating_sub(1));
    if m as u64 > total {
        return Err(Error::InvalidParams(format!("m = {m} exceeds n(n-1) = {total} for n = {n}")));
    }
    if m == 0 {
        return Ok(EdgeList::new(n, Vec::new()));
    }
    let nn = n as u64;
    let mut keys: Vec<u64> = if total <= 4 * m as u64 {
        index::sample(rng, total as usize, m).into_iter().map(|k| k as u64).collect()
    } else {
        // Sparse: draw with replacement, drop duplicates, top up until exactly m remain.
        let mut keys = Vec::with_capacity(m);
        while keys.len() < m {
            let missing = m - keys.len();
            keys.extend((0..missing).map(|_| rng.gen_range(0..total)));
            keys.sort_unstable();
            keys.dedup();
        }
        keys
    };
    keys.sort_unstable();
    let edges = keys.into_iter().map(|k| pair_from_index(k, nn)).collect();
    Ok(EdgeList::new(n, edges))
}

fn scale_free<W: Weight>(n: usize, k: usize, exponent: f64, rng: &mut ChaCha8Rng) -> Result<EdgeList<W>> {
    check_ids(n)?;
    if k == 0 {
        return Err(Error::InvalidParams("edges_per_vertex must be at least 1".into()));
    }
    if !exponent.is_finite() || exponent < 3.0 {
        return Err(Error::InvalidParams(format!("exponent must be finite and >= 3, got {exponent}")));
    }
    if n < k + 1 {
        return Err(Error::InvalidParams(format!("need at least {} vertices for {k} edges per vertex", k + 1)));
    }
    let attractiveness = (exponent - 3.0) * k as f64;

    // Every edge endpoint; a uniform draw from it is degree-proportional.
    let mut endpoints: Vec<VertexId> = Vec::with_capacity(2 * n * k);
    let mut undirected: Vec<(VertexId, VertexId)> = Vec::with_capacity(n * k);
    for u in 0..=k {
        for v in 0..u {
            undirected.push((v as VertexId, u as VertexId));
            endpoints.push(v as VertexId);
            endpoints.push(u as VertexId);
        }
    }
    let mut chosen: Vec<VertexId> = Vec::with_capacity(k);
    for t in (k + 1)..n {
        chosen.clear();
        let uniform_mass = attractiveness * t as f64;
        let p_uniform = uniform_mass / (uniform_mass + endpoints.len() as f64);
        while chosen.len() < k {
            let target = if p_uniform > 0.0 && rng.gen_bool(p_uniform) {
                rng.gen_range(0..t) as VertexId
            } else {
                endpoints[rng.gen_range(0..endpoints.len())]
            };
            if !chosen.contains(&target) {
                chosen.push(target);
            }
        }
        for &v in &chosen {
            undirected.push((v, t as VertexId));
            endpoints.push(v);
            endpoints.push(t as VertexId);
        }
    }
    let edges = undirected.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
    Ok(EdgeList::new(n, edges))
}

fn grid<W: Weight>(rows: usize, cols: usize) -> Result<EdgeList<W>> {
    let n = rows
        .checked_mul(cols)
        .ok_or_else(|| Error::InvalidParams(format!("grid {rows}x{cols} overflows")))?;
    check_ids(n)?;
    let id = |r: usize, c: usize| (r * cols + c) as VertexId;
    let mut edges = Vec::with_capacity(4 * n);
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
                edges.push((id(r, c + 1), id(r, c)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
                edges.push((id(r + 1, c), id(r, c)));
            }
        }
    }
    Ok(EdgeList::new(n, edges))
}
