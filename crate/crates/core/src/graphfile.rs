//! The on-disk graph format.
//!
//! ```json
//! {"vertices": ["x1", "x2", "x3"], "edges": [["x1", "x2"], ["x2", "x3"]]}
//! ```
//!
//! Unknown fields are rejected.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl GraphFile {
    pub fn from_graph(g: &Graph) -> Self {
        GraphFile {
            vertices: g.labels().to_vec(),
            edges: g
                .edges()
                .into_iter()
                .map(|(a, b)| [g.label(a).to_string(), g.label(b).to_string()])
                .collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edge_list(
            self.vertices.iter().cloned(),
            self.edges.iter().map(|[a, b]| (a.clone(), b.clone())),
        )
        .map_err(|e| Error::GraphFile(e.to_string()))
    }
}

/// Parses graph-file text; syntax errors carry line and column.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let file: GraphFile = serde_json::from_str(text)
        .map_err(|e| Error::GraphFile(format!("line {} column {}: {e}", e.line(), e.column())))?;
    file.to_graph()
}

/// Pretty JSON for `g`, newline-terminated.
pub fn write_graph(g: &Graph) -> String {
    let mut out =
        serde_json::to_string_pretty(&GraphFile::from_graph(g)).expect("graph files serialize");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Graph::circulant(6, 2).unwrap();
        let back = parse_graph(&write_graph(&g)).unwrap();
        assert_eq!(back.labels(), g.labels());
        assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn errors_carry_context() {
        let err =
            parse_graph("{\"vertices\": [\"a\"],\n \"edges\": [], \"extra\": 1}").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 2"), "{msg}");
        assert!(msg.contains("extra"), "{msg}");
        let err = parse_graph(r#"{"vertices": ["a"], "edges": [["a", "b"]]}"#).unwrap_err();
        assert!(err.to_string().contains('b'));
        let err = parse_graph(r#"{"vertices": ["a", "a"], "edges": []}"#).unwrap_err();
        assert!(matches!(err, Error::GraphFile(_)));
    }

    #[test]
    fn edgeless_file() {
        let g = parse_graph(r#"{"vertices": ["a", "b"], "edges": []}"#).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.edge_count(), 0);
    }
}
