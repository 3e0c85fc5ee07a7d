//! Command-line options and graph-source parsing.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use frontier_core::graph::SyntheticKind;
use frontier_core::load_balance::StrategyChoice;
use frontier_core::optimizations::DirectionMode;
use frontier_core::primitives::{DEFAULT_DAMPING, DEFAULT_EPSILON, DEFAULT_MAX_ITERS};
use frontier_core::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Primitive {
    Bfs,
    Sssp,
    Bc,
    Cc,
    #[value(alias = "pr")]
    Pagerank,
}

impl fmt::Display for Primitive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OnOff {
    On,
    Off,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

/// Where the graph comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphSource {
    File(PathBuf),
    Generated(SyntheticKind),
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSource::File(p) => write!(f, "{}", p.display()),
            GraphSource::Generated(SyntheticKind::Grid { rows, cols }) => write!(f, "gen:grid:{rows}x{cols}"),
            GraphSource::Generated(SyntheticKind::UniformRandom { n, m }) => write!(f, "gen:uniform:n={n},m={m}"),
            GraphSource::Generated(SyntheticKind::ScaleFree { n, edges_per_vertex, exponent }) => {
                write!(f, "gen:scale-free:n={n},k={edges_per_vertex},exponent={exponent}")
            }
        }
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

fn parse_num<T: FromStr>(key: &str, value: &str) -> Result<T, Error> {
    value.parse().map_err(|_| usage(format!("invalid value {value:?} for {key}")))
}

/// Parses `key=value` pairs, rejecting keys outside `allowed`.
fn key_values<'a>(body: &'a str, allowed: &[&str]) -> Result<Vec<(&'a str, &'a str)>, Error> {
    body.split(',')
        .filter(|part| !part.is_empty())
        .map(|part| {
            let (k, v) = part.split_once('=').ok_or_else(|| usage(format!("expected key=value, got {part:?}")))?;
            if allowed.contains(&k) {
                Ok((k, v))
            } else {
                Err(usage(format!("unknown generator parameter {k:?}; expected one of {allowed:?}")))
            }
        })
        .collect()
}

impl FromStr for GraphSource {
    type Err = Error;

    /// `gen:grid:RxC`, `gen:uniform:n=N,m=M`,
    /// `gen:scale-free:n=N[,k=K][,exponent=E]`, or a Matrix Market path.
    fn from_str(s: &str) -> Result<Self, Error> {
        let Some(spec) = s.strip_prefix("gen:") else {
            return Ok(GraphSource::File(PathBuf::from(s)));
        };
        let (kind, body) = spec.split_once(':').unwrap_or((spec, ""));
        let kind = match kind {
            "grid" => {
                let (r, c) = body.split_once('x').ok_or_else(|| usage(format!("grid spec must be RxC, got {body:?}")))?;
                SyntheticKind::Grid { rows: parse_num("rows", r)?, cols: parse_num("cols", c)? }
            }
            "uniform" => {
                let (mut n, mut m) = (None, None);
                for (k, v) in key_values(body, &["n", "m"])? {
                    match k {
                        "n" => n = Some(parse_num("n", v)?),
                        _ => m = Some(parse_num("m", v)?),
                    }
                }
                match (n, m) {
                    (Some(n), Some(m)) => SyntheticKind::UniformRandom { n, m },
                    _ => return Err(usage("uniform generator needs n= and m=")),
                }
            }
            "scale-free" => {
                let mut n = None;
                let mut edges_per_vertex = SyntheticKind::DEFAULT_EDGES_PER_VERTEX;
                let mut exponent = SyntheticKind::DEFAULT_EXPONENT;
                for (k, v) in key_values(body, &["n", "k", "exponent"])? {
                    match k {
                        "n" => n = Some(parse_num("n", v)?),
                        "k" => edges_per_vertex = parse_num("k", v)?,
                        _ => exponent = parse_num("exponent", v)?,
                    }
                }
                let n = n.ok_or_else(|| usage("scale-free generator needs n="))?;
                SyntheticKind::ScaleFree { n, edges_per_vertex, exponent }
            }
            other => return Err(usage(format!("unknown generator {other:?}; expected grid, uniform or scale-free"))),
        };
        Ok(GraphSource::Generated(kind))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceArg {
    Random,
    Vertex(u32),
}

impl FromStr for SourceArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "random" {
            return Ok(SourceArg::Random);
        }
        s.parse().map(SourceArg::Vertex).map_err(|_| format!("expected a vertex id or \"random\", got {s:?}"))
    }
}

/// Near/far bucket width: a positive integer or `inf` for a single bucket.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaArg {
    Finite(u32),
    Infinite,
}

impl FromStr for DeltaArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "inf" | "infinity" => Ok(DeltaArg::Infinite),
            _ => match s.parse::<u32>() {
                Ok(0) => Err("delta must be positive".into()),
                Ok(d) => Ok(DeltaArg::Finite(d)),
                Err(_) => Err(format!("expected a positive integer or \"inf\", got {s:?}")),
            },
        }
    }
}

impl DeltaArg {
    pub fn value(self) -> u32 {
        match self {
            DeltaArg::Finite(d) => d,
            DeltaArg::Infinite => u32::MAX,
        }
    }
}

#[derive(Debug, Clone, Parser)]
#[command(name = "graphbench", version, about = "Run, time and validate frontier graph primitives")]
pub struct Cli {
    /// Primitive to run.
    #[arg(value_enum)]
    pub primitive: Primitive,

    /// Matrix Market file, or gen:grid:RxC | gen:uniform:n=N,m=M | gen:scale-free:n=N[,k=K][,exponent=E].
    #[arg(long)]
    pub graph: String,

    /// Mirror every edge and drop self-loops before running.
    #[arg(long)]
    pub undirected: bool,

    /// Replace edge weights with uniform integers in [1, 64].
    #[arg(long)]
    pub random_weights: bool,

    /// Seed for generators, random weights and random sources.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Source vertex, or "random" for a seeded pick among vertices with out-edges.
    #[arg(long, default_value = "0")]
    pub src: SourceArg,

    /// Timed repetitions after one untimed warm-up run.
    #[arg(long, default_value_t = 10)]
    pub reps: usize,

    #[arg(long, default_value_t = StrategyChoice::Auto)]
    pub strategy: StrategyChoice,

    /// Frontier size at which balanced partitioning switches to edge granularity.
    #[arg(long)]
    pub lb_threshold: Option<usize>,

    /// Edges per chunk for balanced partitioning.
    #[arg(long)]
    pub chunk_size: Option<usize>,

    #[arg(long, default_value_t = DirectionMode::Auto)]
    pub direction: DirectionMode,

    #[arg(long, value_enum, default_value_t = OnOff::Off)]
    pub idempotent: OnOff,

    /// SSSP bucket width; defaults to the ceiling of the mean edge weight.
    #[arg(long)]
    pub delta: Option<DeltaArg>,

    /// Worker threads; defaults to all available cores.
    #[arg(long)]
    pub threads: Option<usize>,

    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,

    /// Check the result against a serial reference implementation.
    #[arg(long)]
    pub validate: bool,

    /// BC: accumulate over every source instead of only --src.
    #[arg(long)]
    pub bc_all: bool,

    #[arg(long, default_value_t = DEFAULT_DAMPING)]
    pub damping: f64,

    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    pub epsilon: f64,

    #[arg(long, default_value_t = DEFAULT_MAX_ITERS)]
    pub max_iters: usize,
}

impl Cli {
    pub fn graph_source(&self) -> Result<GraphSource, Error> {
        self.graph.parse()
    }
}
