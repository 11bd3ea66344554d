//! Reading and writing graphs.
//!
//! Two text formats are accepted, both 1-based:
//!
//! - JSON: `{"vertices": 4, "edges": [[1, 2], [2, 3]]}`
//! - an edge list: the vertex count on the first line, then one `u v` pair
//!   per line. Blank lines and lines starting with `#` are skipped.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The JSON form of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDocument {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDocument {
            vertices: g.nvertices(),
            edges: g.edges().into_iter().map(|(u, v)| [u + 1, v + 1]).collect(),
        }
    }

    /// Validates the document; `where_` names each edge in diagnostics.
    fn to_graph_with<F>(&self, where_: F) -> Result<Graph>
    where
        F: Fn(usize) -> String,
    {
        if self.vertices == 0 {
            return Err(Error::Parse("vertices: must be positive".into()));
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for (k, &[u, v]) in self.edges.iter().enumerate() {
            for w in [u, v] {
                if w == 0 || w > self.vertices {
                    return Err(Error::Parse(format!(
                        "{}: vertex {w} out of range 1..={}",
                        where_(k),
                        self.vertices
                    )));
                }
            }
            edges.push((u - 1, v - 1));
            // report loops and repeats against the edge that introduced them
            Graph::new(self.vertices, edges.iter().copied())
                .map_err(|e| Error::Parse(format!("{}: {e}", where_(k))))?;
        }
        Graph::new(self.vertices, edges).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_graph(&self) -> Result<Graph> {
        self.to_graph_with(|k| format!("edges[{k}]"))
    }
}

/// Parses either format, chosen by whether the text starts with `{`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edge_list(text)
    }
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(|e| {
        Error::Parse(format!("line {} column {}: {e}", e.line(), e.column()))
    })?;
    doc.to_graph()
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let vertices: usize = header
        .parse()
        .map_err(|_| Error::Parse(format!("line {first}: expected a vertex count, got {header:?}")))?;
    let mut edges = Vec::new();
    let mut line_of = Vec::new();
    for (line, l) in lines {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(Error::Parse(format!(
                "line {line}: expected two vertices, got {} fields",
                fields.len()
            )));
        };
        let parse = |s: &str, field: usize| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("line {line} field {field}: not a vertex: {s:?}")))
        };
        edges.push([parse(u, 1)?, parse(v, 2)?]);
        line_of.push(line);
    }
    GraphDocument { vertices, edges }.to_graph_with(|k| format!("line {}", line_of[k]))
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphDocument::from_graph(g)).expect("plain data serializes")
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.nvertices());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}
