//! Sweeps of `alpha_k(G) >= (k-1)(n - omega)/k` and its equality
//! characterization over enumerated or file-supplied graphs.
//!
//! For `k = 4` the bound and the characterization are theorems, so any
//! counterexample is a bug and is reported as an anomaly. For other `k` the
//! rows are observations and counterexamples are research findings.

use std::fmt::Write as _;
use std::fs;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{enumerate_graphs, EnumerationError, MAX_ENUMERATION_ORDER};
use crate::characterization::{check_bound_k, evaluate_structure};
use crate::format::{to_graph6, FormatError, Graph6Reader};
use crate::graph::Graph;

/// The `k` for which bound and characterization are proven.
pub const THEOREM_K: usize = 4;
const CHECKPOINT_FORMAT: &str = "kindep-sweep-checkpoint/1";
const CHUNK: usize = 256;

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("k_values must be non-empty and every k at least 2")]
    InvalidK,
    #[error("internal enumeration needs n_max <= {MAX_ENUMERATION_ORDER}")]
    MissingOrTooLargeNMax,
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("checkpoint {path}: {message}")]
    Checkpoint { path: PathBuf, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "path")]
pub enum GraphSource {
    Enumeration,
    Graph6File(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub k_values: Vec<usize>,
    /// Required for enumeration; an optional order filter for files.
    pub n_max: Option<usize>,
    pub source: GraphSource,
    pub connected_only: bool,
    /// Skip malformed graph6 lines instead of failing.
    #[serde(default)]
    pub lenient: bool,
    /// Keep one row per (graph, k) in the report.
    #[serde(default)]
    pub record_rows: bool,
}

impl SweepConfig {
    pub fn enumeration(k_values: Vec<usize>, n_max: usize, connected_only: bool) -> Self {
        SweepConfig {
            k_values,
            n_max: Some(n_max),
            source: GraphSource::Enumeration,
            connected_only,
            lenient: false,
            record_rows: false,
        }
    }

    pub fn validate(&self) -> Result<(), SweepError> {
        if self.k_values.is_empty() || self.k_values.iter().any(|&k| k < 2) {
            return Err(SweepError::InvalidK);
        }
        if self.source == GraphSource::Enumeration && !self.n_max.is_some_and(|n| n <= MAX_ENUMERATION_ORDER) {
            return Err(SweepError::MissingOrTooLargeNMax);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingKind {
    BoundViolated,
    EqualityWithoutStructure,
    StructureWithoutEquality,
}

/// Evaluation of one graph for one `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub graph6: String,
    pub n: usize,
    pub k: usize,
    pub alpha: usize,
    pub omega: usize,
    pub bound: String,
    pub bound_holds: bool,
    pub equality: bool,
    pub structural: bool,
    pub failed_condition: Option<String>,
}

impl SweepRow {
    fn finding(&self) -> Option<FindingKind> {
        if !self.bound_holds {
            Some(FindingKind::BoundViolated)
        } else if self.equality && !self.structural {
            Some(FindingKind::EqualityWithoutStructure)
        } else if !self.equality && self.structural {
            Some(FindingKind::StructureWithoutEquality)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    pub k: usize,
    pub n: usize,
    pub graph6: String,
    pub alpha: usize,
    pub omega: usize,
    pub bound: String,
    pub kind: FindingKind,
    /// First structural condition that fails, if any.
    pub failed_condition: Option<String>,
    /// True when `k` is the proven case, i.e. this is a bug, not a finding.
    pub theorem_backed: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub k: usize,
    pub n: usize,
    pub graphs: usize,
    pub bound_violations: usize,
    pub equality: usize,
    pub structural: usize,
    pub equality_and_structural: usize,
    pub mismatches: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportMetadata {
    pub k_values: Vec<usize>,
    pub n_max: Option<usize>,
    pub source: GraphSource,
    pub connected_only: bool,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub metadata: ReportMetadata,
    pub graphs_processed: usize,
    pub tallies: Vec<Tally>,
    pub counterexamples: Vec<Counterexample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<SweepRow>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub skipped_lines: Vec<String>,
}

impl ConjectureReport {
    pub fn new(config: &SweepConfig) -> Self {
        let notes = vec![
            format!("k = {THEOREM_K} rows are proven: any counterexample there is an anomaly"),
            "rows for other k are observations; counterexamples there are findings, not failures".into(),
            "structural predicate for general k: disjoint cycles, cycle lengths 1 mod k, \
             off-cycle components split into connected k-vertex blocks; the block criterion \
             is checked against the generative family only within the recognizer test bounds"
                .into(),
        ];
        ConjectureReport {
            metadata: ReportMetadata {
                k_values: config.k_values.clone(),
                n_max: config.n_max,
                source: config.source.clone(),
                connected_only: config.connected_only,
                notes,
            },
            graphs_processed: 0,
            tallies: Vec::new(),
            counterexamples: Vec::new(),
            rows: config.record_rows.then(Vec::new),
            skipped_lines: Vec::new(),
        }
    }

    /// Counterexamples for the proven `k`.
    pub fn anomalies(&self) -> impl Iterator<Item = &Counterexample> {
        self.counterexamples.iter().filter(|c| c.theorem_backed)
    }

    pub fn anomaly_count(&self) -> usize {
        self.anomalies().count()
    }

    pub fn tally(&self, k: usize, n: usize) -> Option<&Tally> {
        self.tallies.iter().find(|t| t.k == k && t.n == n)
    }

    fn tally_mut(&mut self, k: usize, n: usize) -> &mut Tally {
        let pos = match self.tallies.binary_search_by_key(&(k, n), |t| (t.k, t.n)) {
            Ok(p) => p,
            Err(p) => {
                self.tallies.insert(
                    p,
                    Tally {
                        k,
                        n,
                        ..Tally::default()
                    },
                );
                p
            }
        };
        &mut self.tallies[pos]
    }

    /// Folds the rows of one graph into the report.
    pub fn record(&mut self, rows: Vec<SweepRow>) {
        self.graphs_processed += 1;
        for row in rows {
            let finding = row.finding();
            let t = self.tally_mut(row.k, row.n);
            t.graphs += 1;
            t.bound_violations += !row.bound_holds as usize;
            t.equality += row.equality as usize;
            t.structural += row.structural as usize;
            t.equality_and_structural += (row.equality && row.structural) as usize;
            t.mismatches += (row.equality != row.structural) as usize;
            if let Some(kind) = finding {
                let ce = Counterexample {
                    k: row.k,
                    n: row.n,
                    graph6: row.graph6.clone(),
                    alpha: row.alpha,
                    omega: row.omega,
                    bound: row.bound.clone(),
                    kind,
                    failed_condition: row.failed_condition.clone(),
                    theorem_backed: row.k == THEOREM_K,
                };
                let pos = self.counterexamples.binary_search(&ce).unwrap_or_else(|p| p);
                self.counterexamples.insert(pos, ce);
            }
            if let Some(all) = &mut self.rows {
                all.push(row);
            }
        }
    }
}

/// Evaluates one graph for every requested `k`.
pub fn evaluate_graph(g: &Graph, k_values: &[usize]) -> Vec<SweepRow> {
    let graph6 = to_graph6(g);
    k_values
        .iter()
        .map(|&k| {
            let b = check_bound_k(g, k);
            let s = evaluate_structure(g, k);
            SweepRow {
                graph6: graph6.clone(),
                n: g.n(),
                k,
                alpha: b.alpha,
                omega: g.omega(),
                bound: b.bound.to_string(),
                bound_holds: b.holds,
                equality: b.equality(),
                structural: s.holds(),
                failed_condition: s.failed_condition().map(str::to_owned),
            }
        })
        .collect()
}

type GraphStream = Box<dyn Iterator<Item = Result<Graph, SweepError>>>;

fn graph_stream(config: &SweepConfig, skipped: &mut Vec<String>) -> Result<GraphStream, SweepError> {
    let connected_only = config.connected_only;
    let keep = move |g: &Graph| !connected_only || g.is_connected();
    match &config.source {
        GraphSource::Enumeration => {
            let n_max = config.n_max.unwrap_or(0);
            let mut all = Vec::new();
            for n in 1..=n_max {
                all.extend(enumerate_graphs(n, connected_only)?);
            }
            Ok(Box::new(all.into_iter().map(Ok)))
        }
        GraphSource::Graph6File(path) => {
            let file = fs::File::open(path)?;
            let mut reader = Graph6Reader::new(BufReader::new(file)).lenient(config.lenient);
            let n_max = config.n_max;
            // Read eagerly so lenient-mode skips are known up front.
            let mut graphs = Vec::new();
            for item in reader.by_ref() {
                let g = item?;
                if keep(&g) && n_max.is_none_or(|m| g.n() <= m) {
                    graphs.push(g);
                }
            }
            skipped.extend(reader.skipped().iter().map(|e| e.to_string()));
            Ok(Box::new(graphs.into_iter().map(Ok)))
        }
    }
}

/// Resumable on-disk sweep state.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Checkpoint {
    pub format: String,
    pub config: SweepConfig,
    /// Graphs of the source stream already folded into `report`.
    pub processed: usize,
    pub report: ConjectureReport,
}

impl Checkpoint {
    pub fn load(path: &Path) -> Result<Self, SweepError> {
        let text = fs::read_to_string(path)?;
        let cp: Checkpoint = serde_json::from_str(&text).map_err(|e| SweepError::Checkpoint {
            path: path.into(),
            message: e.to_string(),
        })?;
        if cp.format != CHECKPOINT_FORMAT {
            return Err(SweepError::Checkpoint {
                path: path.into(),
                message: format!("unknown format `{}`", cp.format),
            });
        }
        Ok(cp)
    }

    pub fn store(&self, path: &Path) -> Result<(), SweepError> {
        let tmp = path.with_extension("tmp");
        let text = serde_json::to_string(self).expect("checkpoint serializes");
        fs::write(&tmp, text)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }
}

/// Runs a sweep in memory.
pub fn sweep(config: &SweepConfig) -> Result<ConjectureReport, SweepError> {
    sweep_with_checkpoint(config, None)
}

/// Runs a sweep, saving progress to `checkpoint` after every chunk and
/// resuming from it when it already holds progress for the same config.
pub fn sweep_with_checkpoint(config: &SweepConfig, checkpoint: Option<&Path>) -> Result<ConjectureReport, SweepError> {
    config.validate()?;
    let mut skipped = Vec::new();
    let stream = graph_stream(config, &mut skipped)?;

    let (mut report, done) = match checkpoint.filter(|p| p.exists()) {
        Some(path) => {
            let cp = Checkpoint::load(path)?;
            if cp.config != *config {
                return Err(SweepError::Checkpoint {
                    path: path.into(),
                    message: "checkpoint was written for a different configuration".into(),
                });
            }
            (cp.report, cp.processed)
        }
        None => (ConjectureReport::new(config), 0),
    };
    report.skipped_lines = skipped;

    let mut processed = done;
    let mut stream = stream.skip(done);
    loop {
        let chunk: Vec<Graph> = stream.by_ref().take(CHUNK).collect::<Result<_, _>>()?;
        if chunk.is_empty() {
            break;
        }
        let rows: Vec<Vec<SweepRow>> = chunk.par_iter().map(|g| evaluate_graph(g, &config.k_values)).collect();
        processed += rows.len();
        for r in rows {
            report.record(r);
        }
        if let Some(path) = checkpoint {
            Checkpoint {
                format: CHECKPOINT_FORMAT.into(),
                config: config.clone(),
                processed,
                report: report.clone(),
            }
            .store(path)?;
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Table,
}

/// Deterministic rendering of a report.
pub fn report_render(r: &ConjectureReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Table => render_table(r),
    }
}

fn render_table(r: &ConjectureReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graphs processed: {}", r.graphs_processed);
    let _ = writeln!(
        out,
        "{:>3} {:>3} {:>8} {:>9} {:>8} {:>10} {:>6} {:>10}",
        "k", "n", "graphs", "violated", "equality", "structural", "both", "mismatches"
    );
    for t in &r.tallies {
        let _ = writeln!(
            out,
            "{:>3} {:>3} {:>8} {:>9} {:>8} {:>10} {:>6} {:>10}",
            t.k, t.n, t.graphs, t.bound_violations, t.equality, t.structural, t.equality_and_structural, t.mismatches
        );
    }
    let _ = writeln!(
        out,
        "counterexamples: {} (anomalies for k = {THEOREM_K}: {})",
        r.counterexamples.len(),
        r.anomaly_count()
    );
    for c in &r.counterexamples {
        let _ = writeln!(
            out,
            "\n[{}] k = {} n = {}",
            if c.theorem_backed { "ANOMALY" } else { "finding" },
            c.k,
            c.n
        );
        let _ = writeln!(out, "  graph6: {}", c.graph6);
        let _ = writeln!(out, "  alpha = {}  omega = {}  bound = {}", c.alpha, c.omega, c.bound);
        let kind = match c.kind {
            FindingKind::BoundViolated => "bound violated",
            FindingKind::EqualityWithoutStructure => "equality without structural conditions",
            FindingKind::StructureWithoutEquality => "structural conditions without equality",
        };
        let _ = writeln!(
            out,
            "  failed: {kind}{}",
            c.failed_condition
                .as_deref()
                .map(|f| format!(" ({f})"))
                .unwrap_or_default()
        );
    }
    out
}
