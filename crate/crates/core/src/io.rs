//! Text graph format, DOT export and run statistics.
//!
//! Graph files are line oriented:
//!
//! ```text
//! # comment
//! n m
//! c_0 c_1 ... c_{n-1}     (omitted when n = 0)
//! u v                     (m lines, any order and orientation)
//! ```
//!
//! Serialisation is canonical: edges as `u v` with `u < v`, sorted.

use std::fmt::Write as _;
use std::io::BufRead;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::beta::ContractionTrace;
use crate::fib::Role;
use crate::graph::{ColouredGraph, Colour, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {kind}")]
    At { line: usize, kind: ParseErrorKind },
    #[error("read failed: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed header, expected `n m`")]
    Header,
    #[error("missing header")]
    MissingHeader,
    #[error("malformed colour list")]
    Colours,
    #[error("expected {expected} colours, found {found}")]
    ColourCount { expected: usize, found: usize },
    #[error("malformed edge, expected `u v`")]
    Edge,
    #[error("expected {expected} edges, found {found}")]
    MissingEdges { expected: usize, found: usize },
    #[error("unexpected content after the last edge")]
    Trailing,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl ParseError {
    fn at(line: usize, kind: impl Into<ParseErrorKind>) -> Self {
        ParseError::At { line, kind: kind.into() }
    }

    /// 1-based line number, when the error has one.
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::At { line, .. } => Some(*line),
            ParseError::Io(_) => None,
        }
    }
}

fn numbers<T: std::str::FromStr>(line: &str) -> Option<Vec<T>> {
    line.split_whitespace().map(|t| t.parse().ok()).collect()
}

/// Reads a graph in the text format above.
pub fn parse_graph(reader: impl BufRead) -> Result<ColouredGraph, ParseError> {
    let mut lines = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        lines.push((i + 1, trimmed.to_owned()));
    }
    let mut lines = lines.into_iter();

    let (header_line, header) = lines.next().ok_or(ParseError::at(1, ParseErrorKind::MissingHeader))?;
    let (n, m) = match numbers::<usize>(&header).as_deref() {
        Some(&[n, m]) => (n, m),
        _ => return Err(ParseError::at(header_line, ParseErrorKind::Header)),
    };

    let colours: Vec<Colour> = if n == 0 {
        Vec::new()
    } else {
        let (line_no, line) =
            lines.next().ok_or(ParseError::at(header_line + 1, ParseErrorKind::ColourCount { expected: n, found: 0 }))?;
        let colours = numbers::<Colour>(&line).ok_or(ParseError::at(line_no, ParseErrorKind::Colours))?;
        if colours.len() != n {
            return Err(ParseError::at(line_no, ParseErrorKind::ColourCount { expected: n, found: colours.len() }));
        }
        colours
    };

    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line_no, line) in lines.by_ref().take(m) {
        let (u, v) = match numbers::<usize>(&line).as_deref() {
            Some(&[u, v]) => (u, v),
            _ => return Err(ParseError::at(line_no, ParseErrorKind::Edge)),
        };
        if u >= n || v >= n {
            return Err(ParseError::at(line_no, GraphError::EndpointOutOfRange { u, v, n }));
        }
        if u == v {
            return Err(ParseError::at(line_no, GraphError::SelfLoop(u)));
        }
        edges.push((u, v));
        last_line = line_no;
    }
    if edges.len() < m {
        return Err(ParseError::at(last_line + 1, ParseErrorKind::MissingEdges { expected: m, found: edges.len() }));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(ParseError::at(line_no, ParseErrorKind::Trailing));
    }
    ColouredGraph::new(n, &edges, colours).map_err(|e| ParseError::at(header_line, e))
}

pub fn parse_graph_str(text: &str) -> Result<ColouredGraph, ParseError> {
    parse_graph(text.as_bytes())
}

/// Canonical text form of a graph.
pub fn serialize_graph(g: &ColouredGraph) -> String {
    let mut out = String::with_capacity(16 + 4 * g.n() + 12 * g.m());
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    if g.n() > 0 {
        let colours: Vec<String> = g.colours().iter().map(|c| c.to_string()).collect();
        out.push_str(&colours.join(" "));
        out.push('\n');
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

const PALETTE: [&str; 10] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd",
];

fn role_style(role: Role) -> (&'static str, &'static str) {
    match role {
        Role::P => ("P", "#e41a1c"),
        Role::Q => ("Q", "#377eb8"),
        Role::RootOnly => ("RminusP", "#4daf4a"),
    }
}

/// Undirected DOT rendering. Vertices are filled by colour id, or by role
/// when role labels are given.
pub fn export_dot(g: &ColouredGraph, roles: Option<&[Role]>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle, style=filled];\n");
    for v in 0..g.n() {
        let (class, fill) = match roles.and_then(|r| r.get(v)) {
            Some(&role) => {
                let (class, fill) = role_style(role);
                (class.to_owned(), fill)
            }
            None => {
                let c = g.colour(v);
                (format!("c{c}"), PALETTE[c as usize % PALETTE.len()])
            }
        };
        let _ = writeln!(out, "  {v} [label=\"{v}\", class=\"{class}\", fillcolor=\"{fill}\"];");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// One executed contraction iteration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsRecord {
    pub iteration: usize,
    pub n_before: usize,
    pub m_before: usize,
    pub n_after: usize,
    pub wall_time_ms: f64,
}

/// Statistics for one fixpoint run, written as a single JSON object.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunStats {
    pub n: usize,
    pub m: usize,
    pub iterations: usize,
    pub final_n: usize,
    pub final_m: usize,
    pub total_time_ms: f64,
    pub per_iteration: Vec<StatsRecord>,
}

impl RunStats {
    pub fn from_trace(g: &ColouredGraph, result: &ColouredGraph, trace: &ContractionTrace) -> Self {
        let per_iteration: Vec<StatsRecord> = trace
            .per_iteration
            .iter()
            .zip(&trace.wall_times)
            .enumerate()
            .map(|(i, (r, t))| StatsRecord {
                iteration: i + 1,
                n_before: r.n,
                m_before: r.m,
                n_after: r.n_prime,
                wall_time_ms: t.as_secs_f64() * 1e3,
            })
            .collect();
        Self {
            n: g.n(),
            m: g.m(),
            iterations: trace.iterations,
            final_n: result.n(),
            final_m: result.m(),
            total_time_ms: per_iteration.iter().map(|r| r.wall_time_ms).sum(),
            per_iteration,
        }
    }

    /// Copy with every timing zeroed, for comparing runs.
    pub fn without_timings(&self) -> Self {
        let mut out = self.clone();
        out.total_time_ms = 0.0;
        for r in &mut out.per_iteration {
            r.wall_time_ms = 0.0;
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("stats serialise")
    }
}
