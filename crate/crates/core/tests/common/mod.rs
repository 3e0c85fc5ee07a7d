#![allow(dead_code)]

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use frontier_core::graph::{assign_random_weights, generate_synthetic, to_undirected, SyntheticKind};
use frontier_core::{build_csr, CsrGraph, EdgeList};

pub const INF: u32 = u32::MAX;

pub fn serial_bfs(g: &CsrGraph, source: u32) -> Vec<u32> {
    let mut depth = vec![INF; g.num_vertices()];
    depth[source as usize] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if depth[v as usize] == INF {
                depth[v as usize] = depth[u as usize] + 1;
                queue.push_back(v);
            }
        }
    }
    depth
}

pub fn dijkstra(g: &CsrGraph, source: u32) -> Vec<u32> {
    let weights = g.edge_weights().expect("weighted graph");
    let mut dist = vec![INF; g.num_vertices()];
    dist[source as usize] = 0;
    let mut heap = BinaryHeap::from([Reverse((0u32, source))]);
    while let Some(Reverse((d, u))) = heap.pop() {
        if d > dist[u as usize] {
            continue;
        }
        for e in g.edge_range(u) {
            let v = g.column_indices()[e];
            let nd = d.saturating_add(weights[e]);
            if nd < dist[v as usize] {
                dist[v as usize] = nd;
                heap.push(Reverse((nd, v)));
            }
        }
    }
    dist
}

/// Component label per vertex: the smallest vertex id reachable ignoring direction.
pub fn union_find(g: &CsrGraph) -> Vec<u32> {
    let n = g.num_vertices();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for u in 0..n {
        for &v in g.neighbors(u as u32) {
            let (a, b) = (root(&mut parent, u), root(&mut parent, v as usize));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..n).map(|v| root(&mut parent, v) as u32).collect()
}

/// Brandes's betweenness, halved when the graph is symmetric.
pub fn brandes(g: &CsrGraph) -> Vec<f64> {
    let n = g.num_vertices();
    let mut bc = vec![0.0; n];
    for s in 0..n {
        let mut order = Vec::with_capacity(n);
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut sigma = vec![0.0f64; n];
        let mut dist = vec![-1i64; n];
        sigma[s] = 1.0;
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.neighbors(v as u32) {
                let w = w as usize;
                if dist[w] < 0 {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                    preds[w].push(v);
                }
            }
        }
        let mut delta = vec![0.0; n];
        for &w in order.iter().rev() {
            for &v in &preds[w] {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                bc[w] += delta[w];
            }
        }
    }
    if g.is_symmetric() {
        bc.iter_mut().for_each(|x| *x /= 2.0);
    }
    bc
}

pub fn power_iteration(g: &CsrGraph, damping: f64) -> Vec<f64> {
    let n = g.num_vertices();
    let mut rank = vec![1.0 / n as f64; n];
    for _ in 0..100_000 {
        let dangling: f64 = (0..n).filter(|&v| g.degree(v as u32) == 0).map(|v| rank[v]).sum::<f64>() / n as f64;
        let mut next = vec![0.0; n];
        for (u, &r) in rank.iter().enumerate() {
            let deg = g.degree(u as u32);
            for &v in g.neighbors(u as u32) {
                next[v as usize] += r / deg as f64;
            }
        }
        for x in &mut next {
            *x = (1.0 - damping) / n as f64 + damping * (*x + dangling);
        }
        let change: f64 = next.iter().zip(&rank).map(|(a, b)| (a - b).abs()).sum();
        rank = next;
        if change < 1e-14 {
            break;
        }
    }
    rank
}

pub fn same_partition(a: &[u32], b: &[u32]) -> bool {
    let mut ab = std::collections::HashMap::new();
    let mut ba = std::collections::HashMap::new();
    a.iter().zip(b).all(|(x, y)| *ab.entry(x).or_insert(y) == y && *ba.entry(y).or_insert(x) == x)
}

fn undirected(n: usize, edges: &[(u32, u32)]) -> CsrGraph {
    build_csr(&to_undirected(&EdgeList::new(n, edges.to_vec()))).unwrap()
}

/// Small hand-built graphs plus seeded synthetic ones, all weighted.
pub fn small_suite() -> Vec<(String, CsrGraph)> {
    let mut out: Vec<(String, EdgeList)> = vec![
        ("g1".into(), EdgeList::new(4, vec![(0, 1), (0, 2), (1, 3), (2, 3)])),
        ("path".into(), undirected(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).to_edge_list()),
        ("star".into(), undirected(7, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6)]).to_edge_list()),
        ("cycle".into(), undirected(8, &(0..8).map(|i| (i, (i + 1) % 8)).collect::<Vec<_>>()).to_edge_list()),
        ("two-parts".into(), undirected(9, &[(0, 1), (1, 2), (3, 4), (5, 6), (6, 7), (7, 5)]).to_edge_list()),
        ("directed-dag".into(), EdgeList::new(6, vec![(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (5, 4)])),
        ("single".into(), EdgeList::new(1, vec![])),
    ];
    for seed in 0..3 {
        out.push((format!("uniform-{seed}"), generate_synthetic(SyntheticKind::UniformRandom { n: 300, m: 1500 }, seed).unwrap()));
        out.push((format!("scale-free-{seed}"), generate_synthetic(SyntheticKind::scale_free(400), seed).unwrap()));
    }
    out.push(("grid".into(), generate_synthetic(SyntheticKind::Grid { rows: 15, cols: 12 }, 0).unwrap()));
    out.into_iter()
        .enumerate()
        .map(|(i, (name, el))| (name, build_csr(&assign_random_weights(&el, i as u64)).unwrap()))
        .collect()
}
