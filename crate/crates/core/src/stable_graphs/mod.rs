//! Dual graphs of nodal curves.
//!
//! A vertex is an irreducible component labelled by its geometric genus, an
//! edge is a node. Self-loops are non-separating nodes on one component.
//! Every edge carries a thickness `k >= 1`: the total space of a one-parameter
//! degeneration looks like `x y = t^k` at that node.
//!
//! The arithmetic genus of the curve is `sum g_v + E - V + 1`. A genus-0
//! vertex is stable when at least three branches pass through it (a loop
//! counts twice) and semistable with at least two.

mod canonical;
mod enumerate;
mod io;
mod reduction;

pub use canonical::{automorphism_count, canonical_form, CanonicalKey, GraphClass, MAX_CANONICAL_VERTICES};
pub use enumerate::{
    enumerate_by_degeneration, enumerate_by_partition, enumerate_stable_graphs, MAX_ENUMERATION_GENUS,
    MIN_ENUMERATION_GENUS,
};
pub use reduction::{base_change, resolve, stabilize, stabilize_with};

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Vertex {
    pub genus: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Edge {
    pub ends: [usize; 2],
    pub thickness: u32,
}

impl Edge {
    pub fn new(a: usize, b: usize, thickness: u32) -> Self {
        Edge {
            ends: [a, b],
            thickness,
        }
    }

    pub fn is_loop(&self) -> bool {
        self.ends[0] == self.ends[1]
    }
}

/// Connected vertex-genus-labelled multigraph with edge thicknesses.
///
/// The name follows the usual terminology; the graph need not satisfy the
/// stability condition, see [`StableGraph::stability_class`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StableGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

/// Deligne–Mumford condition on genus-0 components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StabilityClass {
    Stable,
    SemistableNotStable,
    NotSemistable,
}

impl StabilityClass {
    pub fn as_str(self) -> &'static str {
        match self {
            StabilityClass::Stable => "stable",
            StabilityClass::SemistableNotStable => "semistable_not_stable",
            StabilityClass::NotSemistable => "not_semistable",
        }
    }
}

impl fmt::Display for StabilityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl StableGraph {
    /// Validates index ranges, thicknesses and connectivity.
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::domain("a dual graph needs at least one vertex"));
        }
        let n = vertices.len();
        for (i, e) in edges.iter().enumerate() {
            if e.ends.iter().any(|&v| v >= n) {
                return Err(Error::domain(format!(
                    "edge {i} has an end {:?} outside the {n} vertices",
                    e.ends
                )));
            }
            if e.thickness == 0 {
                return Err(Error::domain(format!(
                    "edge {i} has thickness 0; thickness must be >= 1"
                )));
            }
        }
        let g = StableGraph { vertices, edges };
        if !g.is_connected() {
            return Err(Error::domain("dual graph is not connected"));
        }
        Ok(g)
    }

    /// Builds a graph from genera and `(a, b, thickness)` triples.
    pub fn from_parts(genera: &[u32], edges: &[(usize, usize, u32)]) -> Result<Self> {
        Self::new(
            genera.iter().map(|&genus| Vertex { genus }).collect(),
            edges.iter().map(|&(a, b, t)| Edge::new(a, b, t)).collect(),
        )
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.ends[0]].push(e.ends[1]);
            adj[e.ends[1]].push(e.ends[0]);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Number of branches through `v`; a self-loop contributes 2.
    pub fn valence(&self, v: usize) -> Result<usize> {
        if v >= self.vertices.len() {
            return Err(Error::domain(format!(
                "vertex {v} out of range for a graph with {} vertices",
                self.vertices.len()
            )));
        }
        Ok(self.valence_unchecked(v))
    }

    pub(crate) fn valence_unchecked(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| e.ends.iter().filter(|&&x| x == v).count())
            .sum()
    }

    pub(crate) fn valences(&self) -> Vec<usize> {
        let mut val = vec![0; self.vertices.len()];
        for e in &self.edges {
            val[e.ends[0]] += 1;
            val[e.ends[1]] += 1;
        }
        val
    }

    /// Arithmetic genus `sum g_v + E - V + 1`.
    pub fn total_genus(&self) -> u32 {
        let sum: u32 = self.vertices.iter().map(|v| v.genus).sum();
        // connected, so E >= V - 1
        sum + (self.edges.len() + 1 - self.vertices.len()) as u32
    }

    pub fn stability_class(&self) -> StabilityClass {
        let val = self.valences();
        let rational = || {
            self.vertices
                .iter()
                .zip(&val)
                .filter(|(v, _)| v.genus == 0)
                .map(|(_, &k)| k)
        };
        if rational().all(|k| k >= 3) {
            StabilityClass::Stable
        } else if rational().all(|k| k >= 2) {
            StabilityClass::SemistableNotStable
        } else {
            StabilityClass::NotSemistable
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn theta() -> StableGraph {
        StableGraph::from_parts(&[0, 0], &[(0, 1, 1), (0, 1, 1), (0, 1, 1)]).unwrap()
    }

    #[test]
    fn construction_checks() {
        assert!(StableGraph::from_parts(&[], &[]).is_err());
        assert!(StableGraph::from_parts(&[1, 1], &[]).is_err());
        assert!(StableGraph::from_parts(&[1], &[(0, 1, 1)]).is_err());
        assert!(StableGraph::from_parts(&[1, 1], &[(0, 1, 0)]).is_err());
        assert!(StableGraph::from_parts(&[2], &[]).is_ok());
    }

    #[test]
    fn valences() {
        let two_loops = StableGraph::from_parts(&[0], &[(0, 0, 1), (0, 0, 1)]).unwrap();
        assert_eq!(two_loops.valence(0).unwrap(), 4);
        let path = StableGraph::from_parts(&[1, 0, 1], &[(0, 1, 1), (1, 2, 1)]).unwrap();
        assert_eq!(path.valence(1).unwrap(), 2);
        let loop_and_bridge = StableGraph::from_parts(&[0, 1], &[(0, 0, 1), (0, 1, 1)]).unwrap();
        assert_eq!(loop_and_bridge.valence(0).unwrap(), 3);
        assert!(path.valence(3).is_err());
    }

    #[test]
    fn genus_formula() {
        assert_eq!(StableGraph::from_parts(&[2], &[]).unwrap().total_genus(), 2);
        let two_loops = StableGraph::from_parts(&[0], &[(0, 0, 1), (0, 0, 1)]).unwrap();
        assert_eq!(two_loops.total_genus(), 2);
        assert_eq!(theta().total_genus(), 2);
    }

    #[test]
    fn genus_matches_betti_number() {
        // first Betti number by counting independent cycles with union-find
        fn betti(g: &StableGraph) -> u32 {
            let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
            fn find(p: &mut Vec<usize>, x: usize) -> usize {
                if p[x] != x {
                    let r = find(p, p[x]);
                    p[x] = r;
                }
                p[x]
            }
            let mut cycles = 0;
            for e in g.edges() {
                let (a, b) = (find(&mut parent, e.ends[0]), find(&mut parent, e.ends[1]));
                if a == b {
                    cycles += 1;
                } else {
                    parent[a] = b;
                }
            }
            cycles
        }
        for g in [
            theta(),
            StableGraph::from_parts(&[0, 0, 1], &[(0, 1, 1), (1, 2, 2), (0, 0, 1), (0, 1, 1)]).unwrap(),
            StableGraph::from_parts(&[3], &[(0, 0, 1)]).unwrap(),
        ] {
            let sum: u32 = g.vertices().iter().map(|v| v.genus).sum();
            assert_eq!(g.total_genus(), sum + betti(&g));
        }
    }

    #[test]
    fn stability_classes() {
        let tail = StableGraph::from_parts(&[1, 0], &[(0, 1, 1)]).unwrap();
        assert_eq!(tail.stability_class(), StabilityClass::NotSemistable);
        let chain = StableGraph::from_parts(&[1, 0, 1], &[(0, 1, 1), (1, 2, 1)]).unwrap();
        assert_eq!(chain.stability_class(), StabilityClass::SemistableNotStable);
        assert_eq!(theta().stability_class(), StabilityClass::Stable);
    }
}
