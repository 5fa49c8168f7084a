//! Stable reduction on reduced nodal degenerations.
//!
//! A node of thickness `k` (local equation `x y = t^k`) becomes a node of
//! thickness `e k` after the base change `t = s^e`. Resolving it replaces it
//! by a chain of `k - 1` rational `(-2)`-curves joined by thickness-1 nodes.
//! Stabilizing contracts rational components meeting the rest in exactly two
//! points; the two nodes through such a component merge into one whose
//! thickness is the sum.

use super::{Edge, StabilityClass, StableGraph, Vertex};
use crate::error::{Error, Result};

pub fn base_change(g: &StableGraph, e: u32) -> Result<StableGraph> {
    if e == 0 {
        return Err(Error::domain("base change degree must be at least 1"));
    }
    let edges = g
        .edges()
        .iter()
        .map(|edge| Edge::new(edge.ends[0], edge.ends[1], edge.thickness * e))
        .collect();
    StableGraph::new(g.vertices().to_vec(), edges)
}

/// Replaces every node of thickness `k >= 2` by a chain of `k - 1` new
/// genus-0 vertices. New vertices are appended after the existing ones.
pub fn resolve(g: &StableGraph) -> StableGraph {
    let mut vertices = g.vertices().to_vec();
    let mut edges = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        let [a, b] = e.ends;
        let mut prev = a;
        for _ in 1..e.thickness {
            let w = vertices.len();
            vertices.push(Vertex { genus: 0 });
            edges.push(Edge::new(prev, w, 1));
            prev = w;
        }
        edges.push(Edge::new(prev, b, 1));
    }
    StableGraph::new(vertices, edges).expect("subdividing edges preserves connectivity")
}

/// Contracts genus-0 valence-2 vertices in the order given by `pick`.
///
/// At every step `pick(n)` chooses one of the `n` current candidates (indexed
/// in increasing vertex order). The stable model does not depend on the
/// choices; [`stabilize`] always takes the first.
pub fn stabilize_with(g: &StableGraph, mut pick: impl FnMut(usize) -> usize) -> Result<StableGraph> {
    if g.stability_class() == StabilityClass::NotSemistable {
        return Err(Error::domain(
            "stabilization needs a semistable graph; rational tails would need (-1)-curve contraction",
        ));
    }
    if g.total_genus() < 2 {
        return Err(Error::domain(format!(
            "stabilization needs total genus >= 2, got {}",
            g.total_genus()
        )));
    }
    let mut alive = vec![true; g.vertex_count()];
    let mut edges: Vec<Option<Edge>> = g.edges().iter().copied().map(Some).collect();
    loop {
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); alive.len()];
        for (i, e) in edges.iter().enumerate() {
            if let Some(e) = e {
                incident[e.ends[0]].push(i);
                incident[e.ends[1]].push(i);
            }
        }
        let candidates: Vec<usize> = (0..alive.len())
            .filter(|&v| {
                alive[v] && g.vertices()[v].genus == 0 && incident[v].len() == 2 && incident[v][0] != incident[v][1]
            })
            .collect();
        if candidates.is_empty() {
            break;
        }
        let choice = pick(candidates.len());
        let v = candidates[choice.min(candidates.len() - 1)];
        let (i, j) = (incident[v][0], incident[v][1]);
        let (ei, ej) = (edges[i].take().expect("live edge"), edges[j].take().expect("live edge"));
        let other = |e: &Edge| if e.ends[0] == v { e.ends[1] } else { e.ends[0] };
        edges[i] = Some(Edge::new(other(&ei), other(&ej), ei.thickness + ej.thickness));
        alive[v] = false;
    }
    let mut index = vec![usize::MAX; alive.len()];
    let mut vertices = Vec::new();
    for (v, _) in alive.iter().enumerate().filter(|(_, &a)| a) {
        index[v] = vertices.len();
        vertices.push(g.vertices()[v]);
    }
    let edges = edges
        .into_iter()
        .flatten()
        .map(|e| Edge::new(index[e.ends[0]], index[e.ends[1]], e.thickness))
        .collect();
    StableGraph::new(vertices, edges)
}

pub fn stabilize(g: &StableGraph) -> Result<StableGraph> {
    stabilize_with(g, |_| 0)
}
