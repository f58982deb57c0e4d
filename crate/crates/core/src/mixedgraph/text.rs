//! Line-oriented mixed-graph text format.
//!
//! ```text
//! # comment
//! MG 4
//! e 0 1
//! e 1 2
//! e 2 3
//! a 3 0
//! ```
//!
//! `e u v` is an undirected edge and `a u v` the arc `u -> v`. Blank lines
//! and lines starting with `#` are ignored.

use std::fmt::Write;

use thiserror::Error;

use super::{GraphError, MixedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

pub fn parse_mixed_graph(input: &str) -> Result<MixedGraph, ParseError> {
    let mut graph: Option<MixedGraph> = None;
    let mut last_line = 0;
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let tag = tokens.next().unwrap_or_default();
        let numbers = tokens
            .map(|t| {
                t.parse::<usize>().map_err(|_| {
                    ParseError::new(line, format!("expected a vertex number, found `{t}`"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        match (tag, graph.as_mut()) {
            ("MG", None) => match numbers.as_slice() {
                [n] => graph = Some(MixedGraph::new(*n)),
                _ => return Err(ParseError::new(line, "header must be `MG <n>`")),
            },
            ("MG", Some(_)) => return Err(ParseError::new(line, "duplicate header")),
            (_, None) => return Err(ParseError::new(line, "expected header `MG <n>`")),
            (kind @ ("e" | "a"), Some(g)) => {
                let [u, v] = numbers.as_slice() else {
                    return Err(ParseError::new(
                        line,
                        format!("`{kind}` takes two vertices"),
                    ));
                };
                let added = if kind == "e" {
                    g.add_edge(*u, *v)
                } else {
                    g.add_arc(*u, *v)
                };
                added.map_err(|e: GraphError| ParseError::new(line, e.to_string()))?;
            }
            (other, Some(_)) => {
                return Err(ParseError::new(line, format!("unknown record `{other}`")))
            }
        }
    }
    graph.ok_or_else(|| ParseError::new(last_line.max(1), "missing header `MG <n>`"))
}

/// Writes `g` in canonical order: undirected edges first, then arcs.
pub fn write_mixed_graph(g: &MixedGraph) -> String {
    let mut out = format!("MG {}\n", g.n());
    for (u, v) in g.undirected_edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    for (u, v) in g.arcs() {
        writeln!(out, "a {u} {v}").unwrap();
    }
    out
}
