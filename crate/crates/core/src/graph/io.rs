//! Text formats: edge lists, DOT, JSON, and cycle listings.
//!
//! Edge list: a header line `n_vertices m_edges`, then one `labelA labelB`
//! line per edge, `labelA < labelB` in vertex-index order.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Cycle, Graph};
use crate::error::{Error, Result};

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(g.n_edges() * 2 * (g.labels().first().map_or(1, String::len) + 1) + 16);
    let _ = writeln!(out, "{} {}", g.n_vertices(), g.n_edges());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", g.label(u), g.label(v));
    }
    out
}

/// Parses the edge-list format. Vertices are numbered in order of first
/// appearance, so every vertex must lie on at least one edge.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header".into(),
    })?;
    let counts: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::Parse {
            line: 1,
            message: format!("bad header: {e}"),
        })?;
    let [n, m] = counts[..] else {
        return Err(Error::Parse {
            line: 1,
            message: "header must be `n_vertices m_edges`".into(),
        });
    };
    let mut labels: Vec<String> = Vec::with_capacity(n);
    let mut index = std::collections::HashMap::with_capacity(n);
    let mut edges = Vec::with_capacity(m);
    for (i, line) in lines {
        let mut parts = line.split_whitespace();
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("expected two labels, got {line:?}"),
            });
        };
        let mut id = |l: &str| {
            *index.entry(l.to_string()).or_insert_with(|| {
                labels.push(l.to_string());
                labels.len() - 1
            })
        };
        let (u, v) = (id(a), id(b));
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: 1,
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    if labels.len() != n {
        return Err(Error::Parse {
            line: 1,
            message: format!("header announces {n} vertices, edges mention {}", labels.len()),
        });
    }
    let g = Graph::from_edges(labels, edges)?;
    if g.n_edges() != m {
        return Err(Error::Parse {
            line: 1,
            message: "repeated edges in edge list".into(),
        });
    }
    Ok(g)
}

pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{name}\" {{");
    for l in g.labels() {
        let _ = writeln!(out, "  \"{l}\";");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  \"{}\" -- \"{}\";", g.label(u), g.label(v));
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n_vertices: usize,
    pub n_edges: usize,
    pub labels: Vec<String>,
    pub edges: Vec<(String, String)>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n_vertices: g.n_vertices(),
            n_edges: g.n_edges(),
            labels: g.labels().to_vec(),
            edges: g
                .edges()
                .map(|(u, v)| (g.label(u).to_string(), g.label(v).to_string()))
                .collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        let index: std::collections::HashMap<&str, usize> =
            j.labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let lookup = |l: &str| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| Error::MalformedGraph(format!("edge mentions unknown label {l:?}")))
        };
        let edges = j
            .edges
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        let g = Graph::from_edges(j.labels.clone(), edges)?;
        if g.n_vertices() != j.n_vertices || g.n_edges() != j.n_edges {
            return Err(Error::MalformedGraph("declared counts disagree with content".into()));
        }
        Ok(g)
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string_pretty(&GraphJson::from(g)).expect("graph serializes")
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let j: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    Graph::try_from(j)
}

/// One label per line in traversal order; consecutive cycles are separated
/// by a blank line.
pub fn cycles_to_text(g: &Graph, cycles: &[&Cycle]) -> String {
    let mut out = String::new();
    for (i, c) in cycles.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        for &v in c.vertices() {
            out.push_str(g.label(v));
            out.push('\n');
        }
    }
    out
}

pub fn parse_cycles(g: &Graph, text: &str) -> Result<Vec<Cycle>> {
    let mut cycles = Vec::new();
    let mut current: Vec<&str> = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() {
            if !current.is_empty() {
                cycles.push(Cycle::from_labels(g, &current)?);
                current.clear();
            }
        } else {
            current.push(line);
        }
    }
    if !current.is_empty() {
        cycles.push(Cycle::from_labels(g, &current)?);
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Graph {
        let labels = ["00", "01", "11", "10"].map(String::from).to_vec();
        Graph::from_edges(labels, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn edge_list_layout() {
        let text = to_edge_list(&square());
        assert_eq!(text, "4 4\n00 01\n00 10\n01 11\n11 10\n");
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back.labelled_edge_set(), square().labelled_edge_set());
    }

    #[test]
    fn edge_list_rejects_bad_counts() {
        assert!(matches!(parse_edge_list("4 3\n00 01\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("x y\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("2 1\n00 01 11\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn dot_and_json() {
        let g = square();
        let dot = to_dot(&g, "SQ2");
        assert!(dot.starts_with("graph \"SQ2\" {"));
        assert_eq!(dot.matches(" -- ").count(), 4);
        let back = parse_json(&to_json(&g)).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn cycle_listing_round_trip() {
        let g = square();
        let a = Cycle::new(vec![0, 1, 2, 3]);
        let b = Cycle::new(vec![3, 2, 1, 0]);
        let text = cycles_to_text(&g, &[&a, &b]);
        assert_eq!(text, "00\n01\n11\n10\n\n10\n11\n01\n00\n");
        assert_eq!(parse_cycles(&g, &text).unwrap(), vec![a, b]);
    }
}
