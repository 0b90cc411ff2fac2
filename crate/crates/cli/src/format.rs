//! Text formats: signed graphs and group specifications.
//!
//! A graph file starts with `vertices <N>` and lists one `edge <u> <v> <+|->`
//! per line, 0-based. Lines whose first non-blank character is `#` are
//! comments; blank lines are ignored. Edge ids follow file order.
//!
//! ```text
//! # a negative digon with a positive loop
//! vertices 2
//! edge 0 1 -
//! edge 1 0 -
//! edge 1 1 +
//! ```

use std::fmt::Write as _;

use nzflow_core::{FiniteAbelianGroup, Sign, SignedGraph};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError {
        line,
        message: message.into(),
    })
}

fn parse_index(token: &str, line: usize, what: &str) -> Result<usize, FormatError> {
    token
        .parse()
        .or_else(|_| fail(line, format!("{what} `{token}` is not a nonnegative integer")))
}

pub fn parse_graph(text: &str) -> Result<SignedGraph, FormatError> {
    let mut graph: Option<SignedGraph> = None;
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match (tokens[0], graph.as_mut()) {
            ("vertices", None) => {
                if tokens.len() != 2 {
                    return fail(line, "expected `vertices <N>`");
                }
                graph = Some(SignedGraph::new(parse_index(tokens[1], line, "vertex count")?));
            }
            ("vertices", Some(_)) => return fail(line, "duplicate `vertices` line"),
            ("edge", None) => return fail(line, "`edge` before `vertices`"),
            ("edge", Some(g)) => {
                if tokens.len() != 4 {
                    return fail(line, "expected `edge <u> <v> <+|->`");
                }
                let u = parse_index(tokens[1], line, "vertex")?;
                let v = parse_index(tokens[2], line, "vertex")?;
                let sign = match tokens[3] {
                    "+" => Sign::Positive,
                    "-" => Sign::Negative,
                    other => return fail(line, format!("sign must be `+` or `-`, got `{other}`")),
                };
                if let Err(e) = g.add_edge(u, v, sign) {
                    return fail(line, e.to_string());
                }
            }
            (other, _) => return fail(line, format!("unknown directive `{other}`")),
        }
    }
    graph.map_or_else(|| fail(last_line.max(1), "missing `vertices <N>` line"), Ok)
}

pub fn render_graph(g: &SignedGraph) -> String {
    let mut out = format!("vertices {}\n", g.num_vertices());
    for e in g.edges() {
        writeln!(out, "edge {} {} {}", e.u, e.v, e.sign).expect("writing to a String");
    }
    out
}

/// `4,2` is `Z4 x Z2`; the empty string is the trivial group.
pub fn parse_group(spec: &str) -> Result<FiniteAbelianGroup, String> {
    let spec = spec.trim();
    let moduli = if spec.is_empty() {
        Vec::new()
    } else {
        spec.split(',')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|_| format!("group modulus `{}` is not a positive integer", part.trim()))
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    FiniteAbelianGroup::new(moduli).map_err(|e| e.to_string())
}

/// Comma-separated vertex indices; the empty string is the empty set.
pub fn parse_vertex_list(spec: &str) -> Result<Vec<usize>, String> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Ok(Vec::new());
    }
    spec.split(',')
        .map(|part| {
            part.trim()
                .parse()
                .map_err(|_| format!("vertex `{}` is not a nonnegative integer", part.trim()))
        })
        .collect()
}
