//! Serial reference implementations used to validate parallel results.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use frontier_core::primitives::UNREACHED;
use frontier_core::{Graph, VertexId};

pub fn bfs(g: &Graph, source: VertexId) -> Vec<u32> {
    let mut depth = vec![UNREACHED; g.num_vertices()];
    depth[source as usize] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if depth[v as usize] == UNREACHED {
                depth[v as usize] = depth[u as usize] + 1;
                queue.push_back(v);
            }
        }
    }
    depth
}

/// Binary-heap Dijkstra; unreachable vertices keep `u32::MAX`.
pub fn dijkstra(g: &Graph, source: VertexId) -> Vec<u32> {
    let weights = g.edge_weights().expect("dijkstra needs edge weights");
    let mut dist = vec![u32::MAX; g.num_vertices()];
    dist[source as usize] = 0;
    let mut heap = BinaryHeap::from([Reverse((0u32, source))]);
    while let Some(Reverse((d, u))) = heap.pop() {
        if d > dist[u as usize] {
            continue;
        }
        for e in g.edge_range(u) {
            let v = g.column_indices()[e];
            let candidate = d.saturating_add(weights[e]);
            if candidate < dist[v as usize] {
                dist[v as usize] = candidate;
                heap.push(Reverse((candidate, v)));
            }
        }
    }
    dist
}

/// Component of every vertex as its smallest member id, edges taken as undirected.
pub fn union_find(g: &Graph) -> Vec<VertexId> {
    fn root(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let n = g.num_vertices();
    let mut parent: Vec<usize> = (0..n).collect();
    for u in 0..n {
        for &v in g.neighbors(u as VertexId) {
            let (a, b) = (root(&mut parent, u), root(&mut parent, v as usize));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..n).map(|v| root(&mut parent, v) as VertexId).collect()
}

/// Brandes's betweenness over `sources`, halved on symmetric graphs.
pub fn brandes(g: &Graph, sources: &[VertexId]) -> Vec<f64> {
    let n = g.num_vertices();
    let mut bc = vec![0.0; n];
    for &s in sources {
        let s = s as usize;
        let mut order = Vec::with_capacity(n);
        let mut sigma = vec![0.0f64; n];
        let mut dist = vec![u32::MAX; n];
        sigma[s] = 1.0;
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.neighbors(v as VertexId) {
                let w = w as usize;
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                }
            }
        }
        let mut delta = vec![0.0; n];
        for &v in order.iter().rev() {
            for &w in g.neighbors(v as VertexId) {
                let w = w as usize;
                if dist[w] == dist[v] + 1 {
                    delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
                }
            }
            if v != s {
                bc[v] += delta[v];
            }
        }
    }
    if g.is_symmetric() {
        bc.iter_mut().for_each(|x| *x /= 2.0);
    }
    bc
}

/// Power iteration with uniform redistribution of dangling mass, run until
/// the L1 change per iteration drops below `tolerance`.
pub fn power_iteration(g: &Graph, damping: f64, tolerance: f64, max_iters: usize) -> Vec<f64> {
    let n = g.num_vertices();
    if n == 0 {
        return Vec::new();
    }
    let mut rank = vec![1.0 / n as f64; n];
    let mut next = vec![0.0; n];
    for _ in 0..max_iters {
        let dangling: f64 = (0..n).filter(|&v| g.degree(v as VertexId) == 0).map(|v| rank[v]).sum::<f64>() / n as f64;
        next.iter_mut().for_each(|x| *x = 0.0);
        for (u, &r) in rank.iter().enumerate() {
            let deg = g.degree(u as VertexId);
            for &v in g.neighbors(u as VertexId) {
                next[v as usize] += r / deg as f64;
            }
        }
        let mut change = 0.0;
        for (x, old) in next.iter_mut().zip(&rank) {
            *x = (1.0 - damping) / n as f64 + damping * (*x + dangling);
            change += (*x - old).abs();
        }
        std::mem::swap(&mut rank, &mut next);
        if change < tolerance {
            break;
        }
    }
    rank
}
