//! Canonical labelling of genus-labelled multigraphs by individualization
//! and refinement.
//!
//! Vertices start coloured by genus. Colour refinement splits classes by the
//! multiset of (neighbour colour, parallel-edge thicknesses) and by the
//! loops at each vertex, until the ordered partition is equitable. When a
//! class is still non-trivial, each of its vertices is individualized in
//! turn and the search recurses. Every leaf is a discrete ordered partition,
//! hence a relabelling; the canonical key is the least encoding over all
//! leaves. The search tree depends only on the isomorphism type, so the key
//! is an isomorphism invariant, and leaves attaining the least key form one
//! orbit of the automorphism group, which acts freely on leaves.

use std::fmt;

use super::{StableGraph, Vertex};
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`canonical_form`] and [`automorphism_count`].
pub const MAX_CANONICAL_VERTICES: usize = 16;

/// Encoding of a relabelled graph: genera by position, then the sorted list of
/// `(a, b, thickness)` with `a <= b`. Compared lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    pub genera: Vec<u32>,
    pub edges: Vec<(usize, usize, u32)>,
}

/// Isomorphism class of a dual graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphClass {
    pub key: CanonicalKey,
    pub thickness_blind: bool,
}

impl GraphClass {
    /// The graph in canonical labelling. For a thickness-blind class every
    /// thickness is 1.
    pub fn representative(&self) -> StableGraph {
        StableGraph::from_parts(&self.key.genera, &self.key.edges).expect("canonical keys encode valid graphs")
    }

    pub fn edge_count(&self) -> usize {
        self.key.edges.len()
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let genera: Vec<String> = self.genera.iter().map(u32::to_string).collect();
        let edges: Vec<String> = self.edges.iter().map(|(a, b, t)| format!("{a}-{b}:{t}")).collect();
        write!(f, "{}|{}", genera.join(","), edges.join(","))
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.thickness_blind {
            let genera: Vec<String> = self.key.genera.iter().map(u32::to_string).collect();
            let edges: Vec<String> = self.key.edges.iter().map(|(a, b, _)| format!("{a}-{b}")).collect();
            write!(f, "{}|{}", genera.join(","), edges.join(","))
        } else {
            self.key.fmt(f)
        }
    }
}

struct Labelling {
    genus: Vec<u32>,
    edges: Vec<(usize, usize, u32)>,
    /// `adj[u][v]`: sorted thicknesses of the edges between `u` and `v`.
    adj: Vec<Vec<Vec<u32>>>,
}

impl Labelling {
    fn new(g: &StableGraph, thickness_blind: bool) -> Self {
        let n = g.vertex_count();
        let mut adj = vec![vec![Vec::new(); n]; n];
        let mut edges = Vec::with_capacity(g.edge_count());
        for e in g.edges() {
            let t = if thickness_blind { 1 } else { e.thickness };
            let [a, b] = e.ends;
            adj[a][b].push(t);
            if a != b {
                adj[b][a].push(t);
            }
            edges.push((a, b, t));
        }
        for row in &mut adj {
            for cell in row {
                cell.sort_unstable();
            }
        }
        Labelling {
            genus: g.vertices().iter().map(|v: &Vertex| v.genus).collect(),
            edges,
            adj,
        }
    }

    fn n(&self) -> usize {
        self.genus.len()
    }

    fn refine(&self, mut colors: Vec<usize>) -> Vec<usize> {
        let n = self.n();
        let mut cells = count_cells(&colors);
        loop {
            if cells == n {
                return colors;
            }
            let sigs: Vec<_> = (0..n)
                .map(|v| {
                    let mut nbrs: Vec<(usize, &[u32])> = (0..n)
                        .filter(|&w| w != v && !self.adj[v][w].is_empty())
                        .map(|w| (colors[w], self.adj[v][w].as_slice()))
                        .collect();
                    nbrs.sort_unstable();
                    (colors[v], self.adj[v][v].as_slice(), nbrs)
                })
                .collect();
            let new_colors = rank(&sigs);
            let new_cells = count_cells(&new_colors);
            colors = new_colors;
            if new_cells == cells {
                return colors;
            }
            cells = new_cells;
        }
    }

    fn key_for(&self, colors: &[usize]) -> CanonicalKey {
        let mut genera = vec![0; self.n()];
        for (v, &p) in colors.iter().enumerate() {
            genera[p] = self.genus[v];
        }
        let mut edges: Vec<(usize, usize, u32)> = self
            .edges
            .iter()
            .map(|&(a, b, t)| {
                let (pa, pb) = (colors[a], colors[b]);
                (pa.min(pb), pa.max(pb), t)
            })
            .collect();
        edges.sort_unstable();
        CanonicalKey { genera, edges }
    }

    fn search(&self, colors: Vec<usize>, best: &mut Option<(CanonicalKey, usize)>) {
        let colors = self.refine(colors);
        let n = self.n();
        let mut size = vec![0usize; n];
        for &c in &colors {
            size[c] += 1;
        }
        let Some(target) = (0..n).find(|&c| size[c] > 1) else {
            let key = self.key_for(&colors);
            match best {
                Some((k, count)) if *k == key => *count += 1,
                Some((k, _)) if *k < key => {}
                _ => *best = Some((key, 1)),
            }
            return;
        };
        for v in (0..n).filter(|&v| colors[v] == target) {
            let sigs: Vec<(usize, bool)> = (0..n).map(|x| (colors[x], x != v)).collect();
            self.search(rank(&sigs), best);
        }
    }

    fn canonical(&self) -> (CanonicalKey, usize) {
        let initial = rank(&self.genus);
        let mut best = None;
        self.search(initial, &mut best);
        best.expect("search reaches at least one leaf")
    }
}

fn count_cells(colors: &[usize]) -> usize {
    let mut seen: Vec<usize> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Replaces each entry by the rank of its value among the distinct values.
fn rank<T: Ord>(items: &[T]) -> Vec<usize> {
    let mut sorted: Vec<&T> = items.iter().collect();
    sorted.sort();
    sorted.dedup();
    items
        .iter()
        .map(|x| sorted.binary_search(&x).expect("present"))
        .collect()
}

fn guard(g: &StableGraph) -> Result<()> {
    if g.vertex_count() > MAX_CANONICAL_VERTICES {
        return Err(Error::capacity(format!(
            "canonical labelling supports at most {MAX_CANONICAL_VERTICES} vertices, got {}",
            g.vertex_count()
        )));
    }
    Ok(())
}

pub fn canonical_form(g: &StableGraph, thickness_blind: bool) -> Result<GraphClass> {
    guard(g)?;
    let (key, _) = Labelling::new(g, thickness_blind).canonical();
    Ok(GraphClass { key, thickness_blind })
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Size of the automorphism group of the graph with its half-edge structure:
/// vertex permutations preserving genera and thickness-labelled adjacency,
/// times permutations of parallel edges of equal thickness, times the flip
/// of every self-loop.
pub fn automorphism_count(g: &StableGraph) -> Result<u64> {
    guard(g)?;
    let lab = Labelling::new(g, false);
    let (_, vertex_perms) = lab.canonical();
    let mut count = vertex_perms as u64;
    let n = lab.n();
    for u in 0..n {
        for v in u..n {
            let ts = &lab.adj[u][v];
            let mut i = 0;
            while i < ts.len() {
                let j = ts[i..].iter().take_while(|&&t| t == ts[i]).count();
                count *= factorial(j);
                if u == v {
                    count *= 1 << j;
                }
                i += j;
            }
        }
    }
    Ok(count)
}
