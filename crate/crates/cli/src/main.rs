//! `kindep`: command-line front end for the `kindep` library.
//!
//! Exit status: 0 on success, 1 on a domain error (for example a graph
//! whose cycles are not vertex-disjoint given to `shrink`, or a sweep
//! anomaly), 2 on I/O, format or usage errors.

mod input;

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kindep::alpha::{alpha_bruteforce_capped, DEFAULT_BRUTEFORCE_CAP};
use kindep::conjecture::{sweep_with_checkpoint, GraphSource};
use kindep::cycles::ShrinkImage;
use kindep::extremal::{generate_good_graphs_capped, generate_r_capped, DEFAULT_GOOD_CAP, DEFAULT_R_CAP};
use kindep::{
    alpha_exact, alpha_tree, check_good, is_in_r, report_render, shrink, to_graph6, write_edge_list, Graph,
    ReportFormat, SweepConfig,
};

use input::InputArgs;

pub enum CliError {
    Domain(String),
    Input(String),
}

impl CliError {
    pub fn domain(msg: impl Into<String>) -> Self {
        CliError::Domain(msg.into())
    }

    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }
}

type CliResult = Result<(), CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "kindep",
    version,
    about = "Generalized k-independence numbers and their extremal graphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ListFormat {
    /// One JSON document with metadata and graph6 strings.
    Json,
    /// One graph6 line per graph.
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Tree dynamic program on forests, branch-and-reduce otherwise.
    Auto,
    Exact,
    Brute,
    Tree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConvertTarget {
    Graph6,
    EdgeList,
    Dot,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Write to this file instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

impl OutputArgs {
    fn emit(&self, text: &str) -> CliResult {
        match &self.output {
            Some(p) => fs::write(p, text).map_err(|e| CliError::input(format!("{}: {e}", p.display()))),
            None => {
                let mut out = io::stdout().lock();
                out.write_all(text.as_bytes())
                    .and_then(|_| out.flush())
                    .map_err(|e| CliError::input(format!("<stdout>: {e}")))
            }
        }
    }
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Maximum generalized k-independent set: value and lexicographically smallest witness.
    Alpha {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Forbidden tree order k (k >= 2).
        #[arg(long, default_value_t = 4)]
        k: usize,
        /// Solver.
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Output format.
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        format: OutFormat,
    },
    /// Cycle-space dimension |E| - |V| + c(G).
    Omega {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Output format.
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        format: OutFormat,
    },
    /// Pendant, quasi-pendant, Q2, Q3 and Q2' vertex classes.
    Classes {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Output format.
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        format: OutFormat,
    },
    /// Contract each vertex-disjoint cycle to one vertex (T_G) and delete cycle vertices (Gamma_G).
    Shrink {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Output format.
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        format: OutFormat,
    },
    /// Decide whether alpha_4(G) = 3(n - omega)/4, directly and structurally.
    CheckGood {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Include the cycle list, Gamma_G components and R certificates.
        #[arg(long)]
        explain: bool,
        /// Output format.
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        format: OutFormat,
    },
    /// All members of R_i up to isomorphism.
    GenR {
        #[command(flatten)]
        output: OutputArgs,
        /// Number of k-vertex blocks (i >= 1).
        #[arg(long)]
        i: usize,
        /// Block order k (k >= 2).
        #[arg(long, default_value_t = 4)]
        k: usize,
        /// Vertex cap on i * k.
        #[arg(long, default_value_t = DEFAULT_R_CAP)]
        cap: usize,
        /// Output format.
        #[arg(long, value_enum, default_value_t = ListFormat::Json)]
        format: ListFormat,
    },
    /// Decide membership of a tree in R_{n/k}; prints a certificate for members.
    IsR {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Block order k (k >= 2).
        #[arg(long, default_value_t = 4)]
        k: usize,
    },
    /// All connected graphs on n vertices attaining alpha_4 = 3(n - omega)/4.
    GenGood {
        #[command(flatten)]
        output: OutputArgs,
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        /// Vertex cap on n.
        #[arg(long, default_value_t = DEFAULT_GOOD_CAP)]
        cap: usize,
        /// Output format.
        #[arg(long, value_enum, default_value_t = ListFormat::Json)]
        format: ListFormat,
    },
    /// Sweep alpha_k >= (k-1)(n - omega)/k and its equality characterization.
    Sweep {
        #[command(flatten)]
        output: OutputArgs,
        /// Comma-separated k values, each >= 2.
        #[arg(long, value_delimiter = ',', default_value = "4")]
        k: Vec<usize>,
        /// Largest order: enumeration bound (at most 10), or filter for --graph6.
        #[arg(long)]
        n_max: Option<usize>,
        /// Read graphs from a graph6 file instead of enumerating.
        #[arg(long)]
        graph6: Option<PathBuf>,
        /// Connected graphs only.
        #[arg(long)]
        connected: bool,
        /// Skip malformed graph6 lines instead of failing.
        #[arg(long)]
        lenient: bool,
        /// Include one row per (graph, k) in the report.
        #[arg(long)]
        rows: bool,
        /// Report file (alias of --output).
        #[arg(long, conflicts_with = "output")]
        out: Option<PathBuf>,
        /// Resumable JSON checkpoint, rewritten after every chunk.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Worker threads; 0 picks the number of CPUs.
        #[arg(long, env = "KINDEP_JOBS", default_value_t = 0)]
        jobs: usize,
        /// Output format.
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        format: OutFormat,
    },
    /// Re-encode graphs as graph6, edge list or Graphviz dot.
    Convert {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Target format.
        #[arg(long, value_enum)]
        to: ConvertTarget,
    },
}

fn json_line(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn json_pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn run_alpha(g: &Graph, k: usize, method: Method) -> Result<kindep::AlphaResult, CliError> {
    let r = match method {
        Method::Auto if g.is_acyclic() => alpha_tree(g, k),
        Method::Auto | Method::Exact => alpha_exact(g, k),
        Method::Brute => alpha_bruteforce_capped(g, k, DEFAULT_BRUTEFORCE_CAP),
        Method::Tree => alpha_tree(g, k),
    };
    r.map_err(|e| CliError::domain(e.to_string()))
}

fn cmd_alpha(input: &InputArgs, output: &OutputArgs, k: usize, method: Method, format: OutFormat) -> CliResult {
    let g = input.graph()?;
    let r = run_alpha(&g, k, method)?;
    let text = match format {
        OutFormat::Json => json_line(&json!({ "alpha": r.value, "witness": r.witness.members() })),
        OutFormat::Table => format!("alpha_{k} = {}\nwitness: {}\n", r.value, join(r.witness.members())),
    };
    output.emit(&text)
}

fn cmd_omega(input: &InputArgs, output: &OutputArgs, format: OutFormat) -> CliResult {
    let g = input.graph()?;
    let (n, m, c, w) = (g.n(), g.m(), g.component_count(), g.omega());
    let text = match format {
        OutFormat::Json => json_line(&json!({ "n": n, "m": m, "components": c, "omega": w })),
        OutFormat::Table => format!("n = {n}\nm = {m}\ncomponents = {c}\nomega = {w}\n"),
    };
    output.emit(&text)
}

fn cmd_classes(input: &InputArgs, output: &OutputArgs, format: OutFormat) -> CliResult {
    let c = input.graph()?.classes();
    let rows = [
        ("pendant", c.pendant.members()),
        ("quasi_pendant", c.quasi_pendant.members()),
        ("q2", c.q2.members()),
        ("q3", c.q3.members()),
        ("q2_prime", c.q2_prime.members()),
    ];
    let text = match format {
        OutFormat::Json => {
            let obj: serde_json::Map<String, Value> = rows.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            json_line(&obj)
        }
        OutFormat::Table => rows.iter().fold(String::new(), |mut s, (k, v)| {
            let _ = writeln!(s, "{k:<13} {}", join(v));
            s
        }),
    };
    output.emit(&text)
}

fn cmd_shrink(input: &InputArgs, output: &OutputArgs, format: OutFormat) -> CliResult {
    let g = input.graph()?;
    let s = shrink(&g).map_err(|e| CliError::domain(format!("cycles are not vertex-disjoint: {e}")))?;
    // T_G nodes are named by host vertex or `c<i>` for cycle i.
    let off = s.off_cycle_count();
    let name = |t: usize| {
        if t < off {
            s.gamma.new_to_old[t].to_string()
        } else {
            format!("c{}", t - off)
        }
    };
    let nodes: Vec<String> = (0..s.t_graph.n()).map(name).collect();
    let t_edges: Vec<[String; 2]> = s.t_graph.edges().iter().map(|&(u, v)| [name(u), name(v)]).collect();
    let gamma_edges: Vec<[usize; 2]> = s
        .gamma
        .graph
        .edges()
        .iter()
        .map(|&(u, v)| [s.gamma.new_to_old[u], s.gamma.new_to_old[v]])
        .collect();
    let map: Vec<String> = s
        .vertex_map
        .iter()
        .map(|img| match *img {
            ShrinkImage::Vertex(i) => name(i),
            ShrinkImage::Cycle(c) => format!("c{c}"),
        })
        .collect();
    let text = match format {
        OutFormat::Json => json_line(&json!({
            "cycles": s.cycles.cycles,
            "t_graph": { "nodes": nodes, "edges": t_edges },
            "gamma": { "vertices": s.gamma.new_to_old, "edges": gamma_edges },
            "vertex_map": map,
        })),
        OutFormat::Table => {
            let mut out = String::new();
            for (i, c) in s.cycles.iter().enumerate() {
                let _ = writeln!(out, "c{i}: {}", join(c));
            }
            let _ = writeln!(out, "T_G nodes: {}", nodes.join(" "));
            let te: Vec<String> = t_edges.iter().map(|[a, b]| format!("{a}-{b}")).collect();
            let _ = writeln!(out, "T_G edges: {}", te.join(" "));
            let _ = writeln!(out, "Gamma_G vertices: {}", join(&s.gamma.new_to_old));
            let ge: Vec<String> = gamma_edges.iter().map(|[a, b]| format!("{a}-{b}")).collect();
            let _ = writeln!(out, "Gamma_G edges: {}", ge.join(" "));
            out
        }
    };
    output.emit(&text)
}

fn cmd_check_good(input: &InputArgs, output: &OutputArgs, explain: bool, format: OutFormat) -> CliResult {
    let g = input.graph()?;
    let mut r = check_good(&g);
    if !explain {
        r = r.without_explanation();
    }
    let text = match format {
        OutFormat::Json => json_pretty(&r),
        OutFormat::Table => {
            let yn = |b: bool| if b { "yes" } else { "no" };
            let mut out = String::new();
            let _ = writeln!(out, "n = {}  m = {}  omega = {}", r.n, r.m, r.omega);
            let _ = writeln!(out, "bound 3(n - omega)/4 = {}", r.bound_value);
            let _ = writeln!(out, "alpha_4 = {}", r.alpha_value.map_or("-".into(), |a| a.to_string()));
            let _ = writeln!(out, "direct good: {}", r.direct_good.map_or("-", yn));
            let _ = writeln!(out, "cycles vertex-disjoint: {}", yn(r.cond_disjoint));
            let _ = writeln!(out, "cycle lengths 1 mod 4: {:?}", r.cond_cycle_lengths);
            let _ = writeln!(out, "Gamma_G components in R: {:?}", r.cond_gamma);
            let _ = writeln!(out, "structural good: {}", yn(r.structural_good));
            if let Some(e) = &r.explanation {
                for (i, c) in e.cycles.iter().enumerate() {
                    let _ = writeln!(out, "cycle {i}: {}", join(c));
                }
                for gc in &e.gamma_components {
                    let blocks = gc.certificate.as_ref().map_or("not in R".to_string(), |c| {
                        c.blocks
                            .iter()
                            .map(|b| format!("[{}]", join(b)))
                            .collect::<Vec<_>>()
                            .join(" ")
                    });
                    let _ = writeln!(out, "Gamma_G component {}: {blocks}", join(&gc.vertices));
                }
            }
            out
        }
    };
    output.emit(&text)
}

fn list_output(output: &OutputArgs, format: ListFormat, meta: Value, graphs: &[Graph]) -> CliResult {
    let codes: Vec<String> = graphs.iter().map(to_graph6).collect();
    let text = match format {
        ListFormat::Graph6 => codes.iter().map(|c| format!("{c}\n")).collect(),
        ListFormat::Json => {
            let mut obj = meta;
            obj["count"] = json!(codes.len());
            obj["graphs"] = json!(codes);
            json_pretty(&obj)
        }
    };
    output.emit(&text)
}

fn cmd_gen_r(output: &OutputArgs, i: usize, k: usize, cap: usize, format: ListFormat) -> CliResult {
    let graphs = generate_r_capped(i, k, cap).map_err(|e| CliError::domain(e.to_string()))?;
    list_output(
        output,
        format,
        json!({ "family": "R", "i": i, "k": k, "order": i * k }),
        &graphs,
    )
}

fn cmd_gen_good(output: &OutputArgs, n: usize, cap: usize, format: ListFormat) -> CliResult {
    let graphs = generate_good_graphs_capped(n, cap).map_err(|e| CliError::domain(e.to_string()))?;
    list_output(output, format, json!({ "family": "good", "k": 4, "n": n }), &graphs)
}

fn cmd_is_r(input: &InputArgs, output: &OutputArgs, k: usize) -> CliResult {
    let t = input.graph()?;
    let cert = is_in_r(&t, k).map_err(|e| CliError::domain(e.to_string()))?;
    let doc = json!({
        "n": t.n(),
        "k": k,
        "member": cert.is_some(),
        "certificate": cert,
    });
    output.emit(&json_line(&doc))
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    output: &OutputArgs,
    k: Vec<usize>,
    n_max: Option<usize>,
    graph6: Option<PathBuf>,
    connected: bool,
    lenient: bool,
    rows: bool,
    out: Option<PathBuf>,
    checkpoint: Option<PathBuf>,
    jobs: usize,
    format: OutFormat,
) -> CliResult {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build_global()
        .map_err(|e| CliError::input(format!("thread pool: {e}")))?;
    let source = match graph6 {
        Some(p) => GraphSource::Graph6File(p),
        None => GraphSource::Enumeration,
    };
    let config = SweepConfig {
        k_values: k,
        n_max,
        source,
        connected_only: connected,
        lenient,
        record_rows: rows,
    };
    config.validate().map_err(|e| CliError::input(e.to_string()))?;
    let report = sweep_with_checkpoint(&config, checkpoint.as_deref()).map_err(|e| CliError::input(e.to_string()))?;
    for line in &report.skipped_lines {
        eprintln!("kindep: skipped {line}");
    }
    let rendered = report_render(
        &report,
        if format == OutFormat::Json {
            ReportFormat::Json
        } else {
            ReportFormat::Table
        },
    );
    let sink = OutputArgs {
        output: out.or_else(|| output.output.clone()),
    };
    sink.emit(&rendered)?;
    match report.anomaly_count() {
        0 => Ok(()),
        n => Err(CliError::domain(format!(
            "{n} anomalies for k = 4, where the bound and its characterization are proven"
        ))),
    }
}

fn cmd_convert(input: &InputArgs, output: &OutputArgs, to: ConvertTarget) -> CliResult {
    let graphs = input.graphs()?;
    let text = match to {
        ConvertTarget::Graph6 => graphs.iter().map(|g| format!("{}\n", to_graph6(g))).collect(),
        ConvertTarget::EdgeList => graphs.iter().map(write_edge_list).collect::<Vec<_>>().join("\n"),
        ConvertTarget::Dot => graphs.iter().map(Graph::to_dot).collect::<Vec<_>>().join("\n"),
    };
    output.emit(&text)
}

fn run(cmd: Cmd) -> CliResult {
    match cmd {
        Cmd::Alpha {
            input,
            output,
            k,
            method,
            format,
        } => cmd_alpha(&input, &output, k, method, format),
        Cmd::Omega { input, output, format } => cmd_omega(&input, &output, format),
        Cmd::Classes { input, output, format } => cmd_classes(&input, &output, format),
        Cmd::Shrink { input, output, format } => cmd_shrink(&input, &output, format),
        Cmd::CheckGood {
            input,
            output,
            explain,
            format,
        } => cmd_check_good(&input, &output, explain, format),
        Cmd::GenR {
            output,
            i,
            k,
            cap,
            format,
        } => cmd_gen_r(&output, i, k, cap, format),
        Cmd::IsR { input, output, k } => cmd_is_r(&input, &output, k),
        Cmd::GenGood { output, n, cap, format } => cmd_gen_good(&output, n, cap, format),
        Cmd::Sweep {
            output,
            k,
            n_max,
            graph6,
            connected,
            lenient,
            rows,
            out,
            checkpoint,
            jobs,
            format,
        } => cmd_sweep(
            &output, k, n_max, graph6, connected, lenient, rows, out, checkpoint, jobs, format,
        ),
        Cmd::Convert { input, output, to } => cmd_convert(&input, &output, to),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(msg)) => {
            eprintln!("kindep: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("kindep: {msg}");
            ExitCode::from(2)
        }
    }
}
