use num_traits::NumCast;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::EdgeList;
use crate::scalar::Weight;
use crate::VertexId;

pub const MIN_RANDOM_WEIGHT: u32 = 1;
pub const MAX_RANDOM_WEIGHT: u32 = 64;

/// Unordered vertex pairs `(lo, hi)` of the non-loop edges, each paired with
/// the index of its first occurrence, sorted by pair.
fn canonical_pairs<W: Weight>(edges: &EdgeList<W>) -> Vec<(VertexId, VertexId, usize)> {
    let mut pairs: Vec<_> = edges
        .edges
        .iter()
        .enumerate()
        .filter(|(_, &(s, d))| s != d)
        .map(|(i, &(s, d))| (s.min(d), s.max(d), i))
        .collect();
    pairs.sort_unstable();
    pairs.dedup_by_key(|p| (p.0, p.1));
    pairs
}

/// Mirror every edge so the result is symmetric.
///
/// Self-loops are dropped and each unordered pair appears exactly once in
/// each direction. When a pair occurs several times the first occurrence
/// decides the weight of both directions. Output is ordered by pair.
pub fn to_undirected<W: Weight>(edges: &EdgeList<W>) -> EdgeList<W> {
    let pairs = canonical_pairs(edges);
    let mut out = Vec::with_capacity(2 * pairs.len());
    let mut weights = edges.weights.as_ref().map(|_| Vec::with_capacity(2 * pairs.len()));
    for &(_, _, i) in &pairs {
        let (s, d) = edges.edges[i];
        out.push((s, d));
        out.push((d, s));
        if let (Some(ws), Some(w)) = (weights.as_mut(), edges.weight(i)) {
            ws.push(w);
            ws.push(w);
        }
    }
    EdgeList { num_vertices: edges.num_vertices, edges: out, weights }
}

/// Attach integer weights drawn uniformly from `[1, 64]`.
///
/// Weights are drawn per unordered vertex pair in sorted pair order from a
/// seeded ChaCha stream, so `(u, v)` and `(v, u)` always agree and the result
/// depends only on the seed and the set of pairs. Self-loops get their own draw.
pub fn assign_random_weights<W: Weight>(edges: &EdgeList<W>, seed: u64) -> EdgeList<W> {
    let mut keys: Vec<(VertexId, VertexId)> = edges.edges.iter().map(|&(s, d)| (s.min(d), s.max(d))).collect();
    keys.sort_unstable();
    keys.dedup();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<W> = keys
        .iter()
        .map(|_| <W as NumCast>::from(rng.gen_range(MIN_RANDOM_WEIGHT..=MAX_RANDOM_WEIGHT)).expect("weight fits"))
        .collect();
    let weights = edges
        .edges
        .iter()
        .map(|&(s, d)| {
            let slot = keys.binary_search(&(s.min(d), s.max(d))).expect("pair was collected");
            draws[slot]
        })
        .collect();
    EdgeList { num_vertices: edges.num_vertices, edges: edges.edges.clone(), weights: Some(weights) }
}
