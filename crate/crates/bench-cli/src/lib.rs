//! Benchmark harness for the frontier-core primitives: graph ingestion,
//! timed runs, throughput reports and validation against serial oracles.

pub mod config;
pub mod oracle;
pub mod report;
pub mod run;
pub mod validate;

pub use config::{Cli, GraphSource, OutputFormat, Primitive};
pub use report::{compute_mteps, RunReport, Validation};
pub use run::{load_graph, run, Outcome, RunPlan};
