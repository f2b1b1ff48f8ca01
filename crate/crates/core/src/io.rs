//! Text formats for graphs: edge list in and out, DOT and JSON out.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with `0 <= u, v < n`
//! and `u != v`. Lines whose first non-blank character is `#` are comments;
//! blank lines are skipped.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId};

pub fn parse_edge_list(text: &str) -> Result<Multigraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut graph = Multigraph::new(0);
    let mut seen = 0usize;
    let mut last_line = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields = two_integers(trimmed).ok_or_else(|| Error::Parse {
            line,
            message: format!("expected two non-negative integers, got {trimmed:?}"),
        })?;

        match header {
            None => {
                header = Some(fields);
                graph = Multigraph::new(fields.0);
            }
            Some((n, _)) => {
                let (u, v) = fields;
                if u >= n || v >= n {
                    return Err(Error::Parse { line, message: format!("endpoint out of range 0..{n}") });
                }
                if u == v {
                    return Err(Error::SelfLoop { line });
                }
                graph.add_edge(u, v)?;
                seen += 1;
            }
        }
    }

    let (_, m) =
        header.ok_or(Error::Parse { line: last_line.max(1), message: "missing header line \"n m\"".into() })?;
    if seen != m {
        return Err(Error::Parse {
            line: last_line,
            message: format!("header declares {m} edges but {seen} were given"),
        });
    }
    Ok(graph)
}

fn two_integers(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

/// Writes `n m` with `n` the vertex capacity, then edges in id order.
pub fn to_edge_list(g: &Multigraph) -> String {
    let mut out = format!("{} {}\n", g.capacity(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u, e.v);
    }
    out
}

pub fn to_dot(g: &Multigraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {v};");
    }
    for e in g.edges() {
        let _ = writeln!(out, "  {} -- {} [id=\"e{}\"];", e.u, e.v, e.id);
    }
    out.push_str("}\n");
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<[VertexId; 2]>,
}

impl From<&Multigraph> for GraphJson {
    fn from(g: &Multigraph) -> Self {
        GraphJson { vertices: g.vertices().collect(), edges: g.edges().map(|e| [e.u, e.v]).collect() }
    }
}

pub fn to_json(g: &Multigraph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph json is always serializable")
}
