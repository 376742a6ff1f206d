//! The `.hg` text format.
//!
//! ```text
//! # comment
//! !vertices a b c d      (optional; pins the vertex universe and its order)
//! a b c
//! b c d
//! ```
//!
//! Every other non-empty line is one hyperedge given as whitespace-separated
//! labels. Without a `!vertices` directive, vertices are indexed in order of
//! first appearance.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

const VERTICES_DIRECTIVE: &str = "!vertices";

pub fn parse_hg(text: &str) -> Result<Hypergraph> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut pinned = false;
    let mut seen_content = false;
    let mut raw_edges = Vec::new();
    let mut edge_lines = Vec::new();

    for (lineno, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace().peekable();
        if tokens.peek() == Some(&VERTICES_DIRECTIVE) {
            if seen_content {
                return Err(Error::Parse {
                    line: lineno,
                    message: "`!vertices` must precede every edge line".into(),
                });
            }
            for token in tokens.skip(1) {
                if index.insert(token.to_string(), labels.len()).is_some() {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("vertex `{token}` listed twice"),
                    });
                }
                labels.push(token.to_string());
            }
            pinned = true;
            seen_content = true;
            continue;
        }
        if line.starts_with('!') {
            return Err(Error::Parse {
                line: lineno,
                message: format!("unknown directive `{}`", tokens.next().unwrap_or("")),
            });
        }
        seen_content = true;
        let mut edge = Vec::new();
        for token in tokens {
            let v = match index.get(token) {
                Some(&v) => v,
                None if pinned => {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("vertex `{token}` is not in the `!vertices` list"),
                    })
                }
                None => {
                    index.insert(token.to_string(), labels.len());
                    labels.push(token.to_string());
                    labels.len() - 1
                }
            };
            edge.push(v);
        }
        raw_edges.push(edge);
        edge_lines.push(lineno);
    }

    let n = labels.len();
    Hypergraph::validate(raw_edges, n)
        .map_err(|e| {
            let line = match e {
                Error::SingletonEdge { edge } | Error::DuplicateVertexInEdge { edge, .. } => {
                    edge_lines[edge]
                }
                Error::DuplicateEdge { second, .. } => edge_lines[second],
                Error::EmptyVertexSet => 0,
                _ => return e,
            };
            Error::Parse {
                line,
                message: describe(&e, &labels),
            }
        })?
        .with_labels(labels)
}

fn describe(e: &Error, labels: &[String]) -> String {
    match e {
        Error::DuplicateVertexInEdge { vertex, .. } => {
            format!("vertex `{}` appears twice in one edge", labels[*vertex])
        }
        Error::SingletonEdge { .. } => "an edge needs at least two vertices".into(),
        Error::DuplicateEdge { .. } => "edge repeats an earlier edge".into(),
        Error::EmptyVertexSet => "no vertices".into(),
        other => other.to_string(),
    }
}

/// Serializes with a `!vertices` directive so isolated vertices and the
/// vertex order survive a round trip.
pub fn to_hg_string(h: &Hypergraph, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    out.push_str(VERTICES_DIRECTIVE);
    for v in 0..h.n() {
        out.push(' ');
        out.push_str(&h.label(v));
    }
    out.push('\n');
    for edge in h.edges() {
        let line: Vec<_> = edge.iter().map(|&v| h.label(v)).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
