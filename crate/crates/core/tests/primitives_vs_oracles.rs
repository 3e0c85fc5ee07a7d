mod common;

use common::*;
use frontier_core::load_balance::StrategyChoice;
use frontier_core::optimizations::DirectionMode;
use frontier_core::primitives::{default_delta, BcOptions, BcSources, BfsOptions, CcOptions, PrOptions, SsspOptions, NO_PRED};
use frontier_core::{bc, bfs, cc, pagerank, sssp, BcProblem64, PrProblem64};

#[test]
fn bfs_matches_serial_bfs_in_every_configuration() {
    for (name, g) in small_suite() {
        let sources = [0u32, (g.num_vertices() / 2) as u32];
        for &source in &sources {
            let expected = serial_bfs(&g, source);
            for strategy in StrategyChoice::ALL_FIXED {
                for direction in DirectionMode::ALL {
                    for idempotent in [false, true] {
                        let opts = BfsOptions { direction, idempotent, strategy, ..Default::default() };
                        let p = bfs(&g, source, &opts).unwrap();
                        assert_eq!(p.labels, expected, "{name} src {source} {opts:?}");
                        for (v, &pred) in p.preds.iter().enumerate() {
                            if v as u32 != source && p.labels[v] != INF {
                                assert_eq!(p.labels[pred as usize] + 1, p.labels[v], "{name} pred of {v}");
                                assert!(g.neighbors(pred).contains(&(v as u32)));
                            } else {
                                assert_eq!(pred, NO_PRED);
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn sssp_matches_dijkstra_for_every_delta() {
    for (name, g) in small_suite() {
        let d = default_delta(&g).unwrap();
        let expected = dijkstra(&g, 0);
        for strategy in StrategyChoice::ALL_FIXED {
            for delta in [1, d, 10 * d, u32::MAX] {
                let p = sssp(&g, 0, &SsspOptions { delta: Some(delta), strategy, ..Default::default() }).unwrap();
                assert_eq!(p.labels, expected, "{name} delta {delta} {strategy}");
                let weights = g.edge_weights().unwrap();
                for (v, &pred) in p.preds.iter().enumerate() {
                    if v != 0 && expected[v] != INF {
                        let e = g.edge_range(pred).find(|&e| g.column_indices()[e] == v as u32).unwrap();
                        assert!(expected[pred as usize] + weights[e] >= expected[v]);
                    }
                }
            }
        }
    }
}

#[test]
fn cc_matches_union_find_and_is_a_star() {
    for (name, g) in small_suite() {
        let p = cc(&g, &CcOptions::default()).unwrap();
        let expected = union_find(&g);
        assert!(same_partition(&p.component, &expected), "{name}");
        assert_eq!(p.component, expected, "{name}: labels are component minima");
        for &c in &p.component {
            assert_eq!(p.component[c as usize], c);
        }
        let roots = expected.iter().enumerate().filter(|&(v, &c)| v as u32 == c).count();
        assert_eq!(p.num_components, roots);
    }
}

#[test]
fn bc_matches_brandes() {
    for (name, g) in small_suite() {
        let expected = brandes(&g);
        for strategy in StrategyChoice::ALL_FIXED {
            let p: BcProblem64 = bc(&g, &BcSources::All, &BcOptions { strategy, ..Default::default() }).unwrap();
            for (v, (&got, &want)) in p.bc.iter().zip(&expected).enumerate() {
                assert!((got - want).abs() <= 1e-9 * want.abs().max(1.0), "{name} vertex {v}: {got} vs {want}");
            }
        }
    }
}

#[test]
fn pagerank_close_to_power_iteration_and_conserves_mass() {
    for (name, g) in small_suite() {
        let opts = PrOptions::default();
        let p: PrProblem64 = pagerank(&g, &opts).unwrap();
        let expected = power_iteration(&g, opts.damping);
        let l1: f64 = p.rank.iter().zip(&expected).map(|(a, b)| (a - b).abs()).sum();
        assert!(l1 <= 10.0 * opts.epsilon, "{name}: l1 {l1}");
        assert!(p.mass_history.iter().all(|m| (m - 1.0).abs() <= 1e-9), "{name}");
        assert!(p.converged);
    }
}

#[test]
fn outputs_identical_across_strategies() {
    for (name, g) in small_suite() {
        let run = |strategy| {
            let b = bfs(&g, 0, &BfsOptions { strategy, ..Default::default() }).unwrap().labels;
            let s = sssp(&g, 0, &SsspOptions { strategy, ..Default::default() }).unwrap().labels;
            let r: PrProblem64 = pagerank(&g, &PrOptions { strategy, ..Default::default() }).unwrap();
            let c: BcProblem64 = bc(&g, &BcSources::List(vec![0]), &BcOptions { strategy, ..Default::default() }).unwrap();
            (b, s, r.rank.iter().map(|x| x.to_bits()).collect::<Vec<_>>(), c.bc.iter().map(|x| x.to_bits()).collect::<Vec<_>>())
        };
        let reference = run(StrategyChoice::PerElement);
        for strategy in [StrategyChoice::SizeClass, StrategyChoice::Balanced, StrategyChoice::Auto] {
            assert_eq!(run(strategy), reference, "{name} {strategy}");
        }
    }
}

#[test]
fn outputs_identical_across_thread_counts() {
    let suite = small_suite();
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            suite
                .iter()
                .map(|(_, g)| {
                    let r: PrProblem64 = pagerank(g, &PrOptions::default()).unwrap();
                    let c: BcProblem64 = bc(g, &BcSources::All, &BcOptions::default()).unwrap();
                    (
                        bfs(g, 0, &BfsOptions { direction: DirectionMode::Auto, idempotent: true, ..Default::default() }).unwrap().labels,
                        sssp(g, 0, &SsspOptions::default()).unwrap().labels,
                        cc(g, &CcOptions::default()).unwrap().component,
                        r.rank.iter().map(|x| x.to_bits()).collect::<Vec<_>>(),
                        c.bc.iter().map(|x| x.to_bits()).collect::<Vec<_>>(),
                    )
                })
                .collect::<Vec<_>>()
        })
    };
    let reference = run(1);
    for threads in [2, 8] {
        assert!(run(threads) == reference, "{threads} threads");
    }
}
