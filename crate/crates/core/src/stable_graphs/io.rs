//! JSON graph files:
//! `{"vertices": [{"genus": g}, ...], "edges": [{"ends": [i, j], "thickness": k}, ...]}`.
//! A missing thickness reads as 1; written files always carry it.

use serde::Deserialize;

use super::{Edge, StableGraph, Vertex};
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraph {
    vertices: Vec<RawVertex>,
    edges: Vec<RawEdge>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVertex {
    genus: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEdge {
    ends: [usize; 2],
    #[serde(default = "unit_thickness")]
    thickness: u32,
}

fn unit_thickness() -> u32 {
    1
}

impl StableGraph {
    /// Parses a graph file. Malformed JSON is a [`Error::Parse`]; a well-formed
    /// file describing an invalid graph is a [`Error::Domain`].
    pub fn from_json(s: &str) -> Result<Self> {
        let raw: RawGraph = serde_json::from_str(s).map_err(|e| Error::parse(format!("graph file: {e}")))?;
        StableGraph::new(
            raw.vertices.into_iter().map(|v| Vertex { genus: v.genus }).collect(),
            raw.edges
                .into_iter()
                .map(|e| Edge::new(e.ends[0], e.ends[1], e.thickness))
                .collect(),
        )
    }

    /// Pretty-printed graph file, newline terminated.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("graph serializes");
        s.push('\n');
        s
    }

    /// Single-line graph file without trailing newline.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }
}
