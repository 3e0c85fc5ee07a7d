//! Run reports and their table, JSON and CSV renderings.

use std::io::Write;

use serde::Serialize;

use crate::config::{OutputFormat, Primitive};

pub const SCHEMA_VERSION: u32 = 1;

/// Millions of edges traversed per second.
///
/// `None` when the runtime is not positive or either input is not finite.
pub fn compute_mteps(edges: u64, runtime_ms: f64) -> Option<f64> {
    (runtime_ms.is_finite() && runtime_ms > 0.0).then(|| edges as f64 / (runtime_ms * 1e3))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Validation {
    Passed,
    Failed { detail: String },
    Skipped { reason: String },
}

impl Validation {
    pub fn label(&self) -> &'static str {
        match self {
            Validation::Passed => "passed",
            Validation::Failed { .. } => "failed",
            Validation::Skipped { .. } => "skipped",
        }
    }

    pub fn is_failed(&self) -> bool {
        matches!(self, Validation::Failed { .. })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub primitive: Primitive,
    pub graph: String,
    pub num_vertices: usize,
    pub num_edges: usize,
    pub source: Option<u32>,
    pub threads: usize,
    pub strategy: String,
    pub direction: String,
    pub idempotent: bool,
    pub delta: Option<u32>,
    /// One untimed run precedes the timed repetitions.
    pub warmup: bool,
    pub runtimes_ms: Vec<f64>,
    pub average_ms: f64,
    pub mteps: Option<f64>,
    pub edges_traversed: u64,
    pub iterations: usize,
    pub validation: Validation,
    /// SHA-256 over the result arrays, predecessors excluded.
    pub digest: String,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    row: &'a str,
    rep: Option<usize>,
    runtime_ms: f64,
    primitive: Primitive,
    graph: &'a str,
    threads: usize,
    mteps: Option<f64>,
    edges_traversed: Option<u64>,
    iterations: Option<usize>,
    validation: Option<&'a str>,
    digest: Option<&'a str>,
}

impl RunReport {
    pub fn write<W: Write>(&self, format: OutputFormat, out: &mut W) -> anyhow::Result<()> {
        match format {
            OutputFormat::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)?;
            }
            OutputFormat::Csv => self.write_csv(out)?,
            OutputFormat::Table => self.write_table(out)?,
        }
        Ok(())
    }

    fn write_csv<W: Write>(&self, out: &mut W) -> anyhow::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let base = |row, rep, runtime_ms| CsvRow {
            row,
            rep,
            runtime_ms,
            primitive: self.primitive,
            graph: &self.graph,
            threads: self.threads,
            mteps: None,
            edges_traversed: None,
            iterations: None,
            validation: None,
            digest: None,
        };
        for (i, &ms) in self.runtimes_ms.iter().enumerate() {
            w.serialize(base("rep", Some(i + 1), ms))?;
        }
        w.serialize(CsvRow {
            mteps: self.mteps,
            edges_traversed: Some(self.edges_traversed),
            iterations: Some(self.iterations),
            validation: Some(self.validation.label()),
            digest: Some(&self.digest),
            ..base("summary", None, self.average_ms)
        })?;
        w.flush()?;
        Ok(())
    }

    fn write_table<W: Write>(&self, out: &mut W) -> anyhow::Result<()> {
        writeln!(out, "{} on {}", self.primitive, self.graph)?;
        writeln!(out, "  vertices {}  edges {}  threads {}", self.num_vertices, self.num_edges, self.threads)?;
        if let Some(s) = self.source {
            writeln!(out, "  source {s}")?;
        }
        writeln!(out, "  strategy {}  direction {}  idempotent {}", self.strategy, self.direction, self.idempotent)?;
        if let Some(d) = self.delta {
            writeln!(out, "  delta {d}")?;
        }
        writeln!(out, "  warm-up run: {}", if self.warmup { "yes (untimed)" } else { "no" })?;
        writeln!(out, "{:>5}  {:>12}", "rep", "runtime_ms")?;
        for (i, ms) in self.runtimes_ms.iter().enumerate() {
            writeln!(out, "{:>5}  {:>12.4}", i + 1, ms)?;
        }
        writeln!(out, "{:>5}  {:>12.4}", "avg", self.average_ms)?;
        let mteps = self.mteps.map_or_else(|| "n/a".to_string(), |m| format!("{m:.2}"));
        writeln!(out, "MTEPS {mteps}  edges_traversed {}  iterations {}", self.edges_traversed, self.iterations)?;
        match &self.validation {
            Validation::Passed => writeln!(out, "validation passed")?,
            Validation::Failed { detail } => writeln!(out, "validation FAILED: {detail}")?,
            Validation::Skipped { reason } => writeln!(out, "validation skipped: {reason}")?,
        }
        writeln!(out, "digest {}", self.digest)?;
        Ok(())
    }
}
