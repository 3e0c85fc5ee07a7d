//! Graph loading, timed execution and report assembly.

use std::fs::File;
use std::io::BufReader;
use std::time::Instant;

use anyhow::Context;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use frontier_core::graph::{assign_random_weights, generate_synthetic, read_matrix_market, to_undirected};
use frontier_core::load_balance::LoadBalanceParams;
use frontier_core::primitives::{BcOptions, BcSources, BfsOptions, BfsProblem, CcOptions, CcProblem, PrOptions, SsspOptions};
use frontier_core::{bc, bfs, build_csr, cc, pagerank, sssp, BcProblem64, Edges, Error, Graph, PrProblem64, SsspProblem32, VertexId};

use crate::config::{Cli, GraphSource, OnOff, Primitive, SourceArg};
use crate::report::{compute_mteps, RunReport, Validation, SCHEMA_VERSION};
use crate::validate::validate;

/// Result of one primitive run.
#[derive(Debug, Clone)]
pub enum Outcome {
    Bfs(BfsProblem),
    Sssp(SsspProblem32),
    Bc(BcProblem64),
    Cc(CcProblem),
    Pagerank(PrProblem64),
}

impl Outcome {
    pub fn iterations(&self) -> usize {
        match self {
            Outcome::Bfs(p) => p.stats.run.iterations,
            Outcome::Sssp(p) => p.stats.iterations,
            Outcome::Bc(p) => p.stats.iterations,
            Outcome::Cc(p) => p.stats.iterations,
            Outcome::Pagerank(p) => p.stats.iterations,
        }
    }

    pub fn edges_inspected(&self) -> u64 {
        match self {
            Outcome::Bfs(p) => p.stats.run.edges_inspected,
            Outcome::Sssp(p) => p.stats.edges_inspected,
            Outcome::Bc(p) => p.stats.edges_inspected,
            Outcome::Cc(p) => p.stats.edges_inspected,
            Outcome::Pagerank(p) => p.stats.edges_inspected,
        }
    }

    /// Hex SHA-256 of the result arrays in little-endian order.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        let mut put_u32 = |xs: &[u32]| xs.iter().for_each(|x| h.update(x.to_le_bytes()));
        match self {
            Outcome::Bfs(p) => put_u32(&p.labels),
            Outcome::Sssp(p) => put_u32(&p.labels),
            Outcome::Cc(p) => put_u32(&p.component),
            Outcome::Bc(p) => p.bc.iter().for_each(|x| h.update(x.to_le_bytes())),
            Outcome::Pagerank(p) => p.rank.iter().for_each(|x| h.update(x.to_le_bytes())),
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Error::Usage(msg.into()).into()
}

/// Reads or generates the graph and applies the requested transformations.
pub fn load_graph(cli: &Cli) -> anyhow::Result<Graph> {
    let mut edges: Edges = match cli.graph_source()? {
        GraphSource::File(path) => {
            let file = File::open(&path).with_context(|| format!("opening {}", path.display()))?;
            read_matrix_market(BufReader::new(file)).with_context(|| format!("reading {}", path.display()))?
        }
        GraphSource::Generated(kind) => generate_synthetic(kind, cli.seed)?,
    };
    if cli.undirected {
        edges = to_undirected(&edges);
    }
    if cli.random_weights {
        edges = assign_random_weights(&edges, cli.seed);
    } else if cli.primitive == Primitive::Sssp && !edges.is_weighted() {
        return Err(usage("sssp needs edge weights: load a weighted file or pass --random-weights"));
    }
    Ok(build_csr(&edges)?)
}

/// Seeded pick among vertices with at least one out-edge, or vertex 0.
pub fn pick_source(g: &Graph, arg: SourceArg, seed: u64) -> anyhow::Result<VertexId> {
    match arg {
        SourceArg::Vertex(v) if (v as usize) < g.num_vertices() => Ok(v),
        SourceArg::Vertex(v) => Err(usage(format!("source {v} out of range for {} vertices", g.num_vertices()))),
        SourceArg::Random => {
            if g.num_vertices() == 0 {
                return Err(usage("graph has no vertices"));
            }
            let candidates: Vec<VertexId> = (0..g.num_vertices() as VertexId).filter(|&v| g.degree(v) > 0).collect();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok(candidates.choose(&mut rng).copied().unwrap_or(0))
        }
    }
}

/// Everything needed to run one primitive, resolved from the command line.
#[derive(Debug, Clone)]
pub struct RunPlan {
    pub primitive: Primitive,
    pub source: Option<VertexId>,
    pub bc_sources: Vec<VertexId>,
    pub bfs: BfsOptions,
    pub sssp: SsspOptions<u32>,
    pub bc: BcOptions,
    pub cc: CcOptions,
    pub pr: PrOptions,
}

impl RunPlan {
    pub fn from_cli(cli: &Cli, g: &Graph) -> anyhow::Result<Self> {
        let mut params = LoadBalanceParams::default();
        if let Some(t) = cli.lb_threshold {
            params.threshold = t;
        }
        if let Some(c) = cli.chunk_size {
            params.chunk_size = c;
        }
        params.validate()?;
        let needs_source = matches!(cli.primitive, Primitive::Bfs | Primitive::Sssp) || (cli.primitive == Primitive::Bc && !cli.bc_all);
        let source = if needs_source { Some(pick_source(g, cli.src, cli.seed)?) } else { None };
        let bc_sources = match (cli.primitive, source) {
            (Primitive::Bc, Some(s)) => vec![s],
            (Primitive::Bc, None) => (0..g.num_vertices() as VertexId).collect(),
            _ => Vec::new(),
        };
        let pr = PrOptions { damping: cli.damping, epsilon: cli.epsilon, max_iters: cli.max_iters, strategy: cli.strategy, params };
        if cli.primitive == Primitive::Pagerank {
            pr.validate()?;
        }
        Ok(Self {
            primitive: cli.primitive,
            source,
            bc_sources,
            bfs: BfsOptions { direction: cli.direction, idempotent: cli.idempotent == OnOff::On, strategy: cli.strategy, params },
            sssp: SsspOptions { delta: cli.delta.map(|d| d.value()), strategy: cli.strategy, params },
            bc: BcOptions { strategy: cli.strategy, params },
            cc: CcOptions { params },
            pr,
        })
    }

    pub fn execute(&self, g: &Graph) -> anyhow::Result<Outcome> {
        Ok(match self.primitive {
            Primitive::Bfs => Outcome::Bfs(bfs(g, self.source.expect("source resolved"), &self.bfs)?),
            Primitive::Sssp => Outcome::Sssp(sssp(g, self.source.expect("source resolved"), &self.sssp)?),
            Primitive::Bc => {
                let sources = match self.source {
                    Some(s) => BcSources::List(vec![s]),
                    None => BcSources::All,
                };
                Outcome::Bc(bc(g, &sources, &self.bc)?)
            }
            Primitive::Cc => Outcome::Cc(cc(g, &self.cc)?),
            Primitive::Pagerank => Outcome::Pagerank(pagerank(g, &self.pr)?),
        })
    }
}

/// Times `reps` runs of the plan after one untimed warm-up, inside a pool of
/// `threads` workers (0 means all cores). Only the primitive call is timed.
pub fn timed_runs(g: &Graph, plan: &RunPlan, reps: usize, threads: usize) -> anyhow::Result<(Vec<f64>, Outcome, usize)> {
    if reps == 0 {
        return Err(usage("--reps must be at least 1"));
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
    let workers = pool.current_num_threads();
    pool.install(|| {
        let mut last = plan.execute(g)?;
        let mut runtimes = Vec::with_capacity(reps);
        for _ in 0..reps {
            let start = Instant::now();
            last = plan.execute(g)?;
            runtimes.push(start.elapsed().as_secs_f64() * 1e3);
        }
        Ok((runtimes, last, workers))
    })
}

pub fn run(cli: &Cli) -> anyhow::Result<RunReport> {
    let g = load_graph(cli)?;
    let plan = RunPlan::from_cli(cli, &g)?;
    let (runtimes_ms, outcome, threads) = timed_runs(&g, &plan, cli.reps, cli.threads.unwrap_or(0))?;
    let average_ms = runtimes_ms.iter().sum::<f64>() / runtimes_ms.len() as f64;
    let validation = if cli.validate {
        validate(&g, &outcome, plan.source, &plan.bc_sources, cli.damping, cli.epsilon)
    } else {
        Validation::Skipped { reason: "not requested".into() }
    };
    let edges_traversed = outcome.edges_inspected();
    Ok(RunReport {
        schema_version: SCHEMA_VERSION,
        primitive: cli.primitive,
        graph: cli.graph_source()?.to_string(),
        num_vertices: g.num_vertices(),
        num_edges: g.num_edges(),
        source: plan.source,
        threads,
        strategy: cli.strategy.to_string(),
        direction: cli.direction.to_string(),
        idempotent: plan.bfs.idempotent,
        delta: match &outcome {
            Outcome::Sssp(p) => Some(p.delta),
            _ => None,
        },
        warmup: true,
        runtimes_ms,
        average_ms,
        mteps: compute_mteps(edges_traversed, average_ms),
        edges_traversed,
        iterations: outcome.iterations(),
        validation,
        digest: outcome.digest(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn cli(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("graphbench").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn grid_bfs_ten_reps_validated() {
        let report = run(&cli(&["bfs", "--graph", "gen:grid:100x100", "--validate", "--threads", "1", "--direction", "push"])).unwrap();
        assert_eq!(report.runtimes_ms.len(), 10);
        assert_eq!(report.validation, Validation::Passed);
        assert!(report.warmup);
        assert_eq!(report.edges_traversed, report.num_edges as u64);
    }

    #[test]
    fn sssp_without_weights_is_usage_error() {
        let err = run(&cli(&["sssp", "--graph", "gen:grid:5x5", "--reps", "1"])).unwrap_err();
        assert!(matches!(err.downcast_ref::<Error>(), Some(Error::Usage(_))));
        let ok = run(&cli(&["sssp", "--graph", "gen:grid:5x5", "--random-weights", "--reps", "1", "--validate"])).unwrap();
        assert_eq!(ok.validation, Validation::Passed);
    }

    #[test]
    fn random_source_has_out_edges_and_is_seeded() {
        let g = build_csr(&Edges::new(5, vec![(3, 4)])).unwrap();
        assert_eq!(pick_source(&g, SourceArg::Random, 1).unwrap(), 3);
        assert!(pick_source(&g, SourceArg::Vertex(5), 1).is_err());
    }

    #[test]
    fn every_primitive_validates() {
        for p in ["bfs", "sssp", "bc", "cc", "pagerank"] {
            let report =
                run(&cli(&[p, "--graph", "gen:uniform:n=200,m=1000", "--random-weights", "--reps", "2", "--validate", "--bc-all"])).unwrap();
            assert_eq!(report.validation, Validation::Passed, "{p}");
        }
    }

    #[test]
    fn digest_ignores_thread_count() {
        let one = run(&cli(&["pagerank", "--graph", "gen:scale-free:n=500", "--reps", "1", "--threads", "1"])).unwrap();
        let four = run(&cli(&["pagerank", "--graph", "gen:scale-free:n=500", "--reps", "1", "--threads", "4"])).unwrap();
        assert_eq!(one.digest, four.digest);
        assert_eq!(four.threads, 4);
    }
}
