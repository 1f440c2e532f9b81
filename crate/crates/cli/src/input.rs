use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use kindep::format::from_graph6_line;
use kindep::{parse_edge_list, FormatError, Graph};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// Edge list if the first data line contains whitespace, graph6 otherwise.
    Auto,
    EdgeList,
    Graph6,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file; reads stdin when omitted or `-`.
    pub input: Option<PathBuf>,
    /// Input format.
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub input_format: InputFormat,
}

impl InputArgs {
    fn read_text(&self) -> Result<String, CliError> {
        match self.input.as_deref() {
            None => read_stdin(),
            Some(p) if p == Path::new("-") => read_stdin(),
            Some(p) => fs::read_to_string(p).map_err(|e| CliError::input(format!("{}: {e}", p.display()))),
        }
    }

    /// Every graph in the input: one for edge lists, one per line for graph6.
    pub fn graphs(&self) -> Result<Vec<Graph>, CliError> {
        let text = self.read_text()?;
        let format = match self.input_format {
            InputFormat::Auto => detect(&text),
            f => f,
        };
        let named = |e: FormatError| match &self.input {
            Some(p) => CliError::input(format!("{}: {e}", p.display())),
            None => CliError::input(format!("<stdin>: {e}")),
        };
        match format {
            InputFormat::EdgeList => Ok(vec![parse_edge_list(&text).map_err(named)?]),
            _ => text
                .lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty())
                .map(|(i, l)| from_graph6_line(l.trim(), i + 1).map_err(named))
                .collect(),
        }
    }

    /// Exactly one graph.
    pub fn graph(&self) -> Result<Graph, CliError> {
        let mut all = self.graphs()?;
        match all.len() {
            1 => Ok(all.pop().expect("one graph")),
            0 => Err(CliError::input("input holds no graph")),
            n => Err(CliError::input(format!("expected one graph, input holds {n}"))),
        }
    }
}

fn read_stdin() -> Result<String, CliError> {
    let mut s = String::new();
    io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| CliError::input(format!("<stdin>: {e}")))?;
    Ok(s)
}

fn detect(text: &str) -> InputFormat {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(l) if l.split_whitespace().count() > 1 => InputFormat::EdgeList,
        _ => InputFormat::Graph6,
    }
}
