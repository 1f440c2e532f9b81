//! Text formats: whitespace edge lists and graph6.

use std::fmt::Write as _;
use std::io::BufRead;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl FormatError {
    fn parse(line: usize, message: impl Into<String>) -> Self {
        FormatError::Parse {
            line,
            message: message.into(),
        }
    }

    /// 1-based line the error refers to, when known.
    pub fn line(&self) -> Option<usize> {
        match self {
            FormatError::Parse { line, .. } | FormatError::Graph { line, .. } => Some(*line),
            FormatError::Io(_) => None,
        }
    }
}

/// Renders `n m` followed by one `u v` line per edge.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses the edge-list format. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| FormatError::parse(1, "missing `n m` header"))?;
    let [n, m] = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        if edges.len() == m {
            return Err(FormatError::parse(line, format!("more than the declared {m} edges")));
        }
        let [u, v] = parse_pair(line, body)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(FormatError::parse(
            hline,
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges).map_err(|source| FormatError::Graph { line: hline, source })
}

fn parse_pair(line: usize, body: &str) -> Result<[usize; 2], FormatError> {
    let toks: Vec<&str> = body.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(FormatError::parse(line, format!("expected two integers, got `{body}`")));
    }
    let num = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| FormatError::parse(line, format!("`{t}` is not a non-negative integer")))
    };
    Ok([num(toks[0])?, num(toks[1])?])
}

const GRAPH6_HEADER: &str = ">>graph6<<";

fn push_size(out: &mut String, n: usize) {
    let push6 = |out: &mut String, x: usize| out.push((63 + (x & 63) as u8) as char);
    if n <= 62 {
        push6(out, n);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            push6(out, n >> shift);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            push6(out, n >> shift);
        }
    }
}

/// Encodes `g` as a header-less graph6 string (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(((acc << (6 - bits)) + 63) as char);
    }
    out
}

/// Decodes one graph6 string. `line` is only used for error reporting.
pub fn from_graph6_line(text: &str, line: usize) -> Result<Graph, FormatError> {
    let text = text.trim_end_matches(['\r', '\n']);
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(FormatError::parse(
            line,
            format!("invalid graph6 character at byte {pos}"),
        ));
    }
    let val = |i: usize| -> Result<usize, FormatError> {
        bytes
            .get(i)
            .map(|&b| (b - 63) as usize)
            .ok_or_else(|| FormatError::parse(line, "truncated graph6 size"))
    };
    let (n, mut pos) = match bytes.first() {
        None => return Err(FormatError::parse(line, "empty graph6 line")),
        Some(&b'~') if bytes.get(1) == Some(&b'~') => {
            let mut n = 0;
            for i in 2..8 {
                n = (n << 6) | val(i)?;
            }
            (n, 8)
        }
        Some(&b'~') => {
            let mut n = 0;
            for i in 1..4 {
                n = (n << 6) | val(i)?;
            }
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    let total = n * n.saturating_sub(1) / 2;
    let need = total.div_ceil(6);
    if bytes.len() - pos != need {
        return Err(FormatError::parse(
            line,
            format!(
                "graph6 body has {} bytes, expected {need} for n = {n}",
                bytes.len() - pos
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = (bytes[pos + k / 6] - 63) as usize;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
            if k == total {
                break 'outer;
            }
        }
    }
    pos += need;
    if total % 6 != 0 {
        let last = (bytes[pos - 1] - 63) as usize;
        let pad = 6 - total % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(FormatError::parse(line, "non-zero graph6 padding bits"));
        }
    }
    Graph::new(n, edges).map_err(|source| FormatError::Graph { line, source })
}

/// Streams graphs from graph6 text, one per non-blank line, in file order.
///
/// In lenient mode malformed lines are skipped and recorded; otherwise the
/// first bad line ends the stream with an error.
pub struct Graph6Reader<R> {
    inner: R,
    line: usize,
    lenient: bool,
    done: bool,
    skipped: Vec<FormatError>,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(inner: R) -> Self {
        Graph6Reader {
            inner,
            line: 0,
            lenient: false,
            done: false,
            skipped: Vec::new(),
        }
    }

    pub fn lenient(mut self, lenient: bool) -> Self {
        self.lenient = lenient;
        self
    }

    /// Errors for lines skipped in lenient mode.
    pub fn skipped(&self) -> &[FormatError] {
        &self.skipped
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<Graph, FormatError>;

    fn next(&mut self) -> Option<Self::Item> {
        let mut buf = String::new();
        while !self.done {
            buf.clear();
            match self.inner.read_line(&mut buf) {
                Ok(0) => self.done = true,
                Ok(_) => {
                    self.line += 1;
                    let body = buf.trim();
                    if body.is_empty() {
                        continue;
                    }
                    match from_graph6_line(body, self.line) {
                        Ok(g) => return Some(Ok(g)),
                        Err(e) if self.lenient => self.skipped.push(e),
                        Err(e) => {
                            self.done = true;
                            return Some(Err(e));
                        }
                    }
                }
                Err(e) => {
                    self.done = true;
                    return Some(Err(e.into()));
                }
            }
        }
        None
    }
}

/// Reads every graph from graph6 text, strictly.
pub fn read_graph6<R: BufRead>(reader: R) -> Result<Vec<Graph>, FormatError> {
    Graph6Reader::new(reader).collect()
}
