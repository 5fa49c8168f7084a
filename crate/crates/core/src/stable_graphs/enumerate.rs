//! Exhaustive enumeration of stable graphs of a given genus.
//!
//! Bounds: for a stable graph of genus `g`, summing `2 g_v - 2 + val(v)` over
//! the vertices gives `2(sum g_v) - 2V + 2E = 2g - 2`. Stability makes each
//! summand at least 1, so `V <= 2g - 2`, and since `sum val(v) = 2E`,
//! `3V <= 2E` for all-rational graphs, giving `E = g - 1 + V - sum g_v <= 3g - 3`.
//!
//! Two generators are provided. [`enumerate_by_degeneration`] (behind
//! [`enumerate_stable_graphs`]) starts from the smooth curve and repeatedly
//! degenerates one vertex, adding a loop or splitting it in two; this
//! reaches every stable graph because contracting any edge of a stable
//! graph leaves a stable graph. [`enumerate_by_partition`] fixes the vertex
//! count and the genus multiset, then fills an edge multiplicity matrix
//! under valence bounds.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{canonical_form, Edge, GraphClass, StabilityClass, StableGraph, Vertex};
use crate::error::{Error, Result};

pub const MIN_ENUMERATION_GENUS: u32 = 2;
pub const MAX_ENUMERATION_GENUS: u32 = 5;

fn guard(g: u32) -> Result<()> {
    if !(MIN_ENUMERATION_GENUS..=MAX_ENUMERATION_GENUS).contains(&g) {
        return Err(Error::capacity(format!(
            "enumeration supports genus {MIN_ENUMERATION_GENUS}..={MAX_ENUMERATION_GENUS}, got {g}"
        )));
    }
    Ok(())
}

fn sorted(classes: impl IntoIterator<Item = GraphClass>) -> Vec<GraphClass> {
    let mut out: Vec<GraphClass> = classes.into_iter().collect();
    out.sort_by(|a, b| (a.edge_count(), &a.key).cmp(&(b.edge_count(), &b.key)));
    out.dedup();
    out
}

/// Non-decreasing genus vectors of length `v` with sum at most `max_sum`.
fn genus_vectors(v: usize, max_sum: u32) -> Vec<Vec<u32>> {
    fn go(v: usize, min: u32, budget: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == v {
            out.push(cur.clone());
            return;
        }
        for x in min..=budget {
            let left = (v - cur.len() - 1) as u32;
            if x * (left + 1) > budget {
                break;
            }
            cur.push(x);
            go(v, x, budget - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(v, 0, max_sum, &mut Vec::new(), &mut out);
    out
}

struct Filler<'a> {
    genera: &'a [u32],
    pairs: Vec<(usize, usize)>,
    lo: Vec<usize>,
    hi: Vec<usize>,
    val: Vec<usize>,
    mult: Vec<usize>,
    found: BTreeSet<GraphClass>,
}

impl Filler<'_> {
    fn run(&mut self, idx: usize, remaining: usize) {
        if idx == self.pairs.len() {
            if remaining == 0 {
                self.emit();
            }
            return;
        }
        let (i, j) = self.pairs[idx];
        let max = if i == j {
            (self.hi[i] - self.val[i]) / 2
        } else {
            (self.hi[i] - self.val[i]).min(self.hi[j] - self.val[j])
        }
        .min(remaining);
        let closes_row = j + 1 == self.genera.len();
        for m in 0..=max {
            let step = if i == j { 2 * m } else { m };
            self.val[i] += step;
            if i != j {
                self.val[j] += m;
            }
            self.mult[idx] = m;
            // row i is complete once its last pair is placed
            let ok = !closes_row || {
                self.val[i] >= self.lo[i]
                    && (i == 0 || self.genera[i - 1] != self.genera[i] || self.val[i - 1] <= self.val[i])
            };
            if ok && self.deficit() <= 2 * (remaining - m) {
                self.run(idx + 1, remaining - m);
            }
            self.val[i] -= step;
            if i != j {
                self.val[j] -= m;
            }
        }
        self.mult[idx] = 0;
    }

    /// Valence still missing to reach the lower bounds; one edge supplies at most 2.
    fn deficit(&self) -> usize {
        self.lo.iter().zip(&self.val).map(|(l, v)| l.saturating_sub(*v)).sum()
    }

    fn emit(&mut self) {
        let mut edges = Vec::new();
        for (idx, &(i, j)) in self.pairs.iter().enumerate() {
            for _ in 0..self.mult[idx] {
                edges.push(Edge::new(i, j, 1));
            }
        }
        let vertices = self.genera.iter().map(|&genus| Vertex { genus }).collect();
        let Ok(g) = StableGraph::new(vertices, edges) else {
            return; // disconnected
        };
        if g.stability_class() == StabilityClass::Stable {
            self.found
                .insert(canonical_form(&g, true).expect("vertex count within the canonical guard"));
        }
    }
}

fn fill(genus: u32, genera: &[u32], edges: usize) -> BTreeSet<GraphClass> {
    let v = genera.len();
    let g = genus as usize;
    // every other vertex contributes at least 1 to sum(2 g_v - 2 + val) = 2g - 2
    let hi: Vec<usize> = genera
        .iter()
        .map(|&gv| (2 * g + 1).saturating_sub(v + 2 * gv as usize))
        .collect();
    let lo: Vec<usize> = genera
        .iter()
        .map(|&gv| {
            let stable = 3usize.saturating_sub(2 * gv as usize);
            if v > 1 {
                stable.max(1)
            } else {
                stable
            }
        })
        .collect();
    if lo.iter().zip(&hi).any(|(l, h)| l > h) {
        return BTreeSet::new();
    }
    let pairs: Vec<(usize, usize)> = (0..v).flat_map(|i| (i..v).map(move |j| (i, j))).collect();
    let mut filler = Filler {
        genera,
        mult: vec![0; pairs.len()],
        pairs,
        lo,
        hi,
        val: vec![0; v],
        found: BTreeSet::new(),
    };
    filler.run(0, edges);
    filler.found
}

/// Stable graph classes of genus `g` found by fixing the vertex count and
/// genus multiset and filling the edge multiplicity matrix. Same output
/// contract as [`enumerate_stable_graphs`].
pub fn enumerate_by_partition(g: u32, edges: Option<usize>) -> Result<Vec<GraphClass>> {
    guard(g)?;
    let max_vertices = 2 * g as usize - 2;
    let jobs: Vec<Vec<u32>> = (1..=max_vertices)
        .flat_map(|v| genus_vectors(v, g))
        .filter(|genera| {
            let e = g as usize - 1 + genera.len() - genera.iter().sum::<u32>() as usize;
            edges.is_none_or(|k| k == e)
        })
        .collect();
    let found: Vec<BTreeSet<GraphClass>> = jobs
        .par_iter()
        .map(|genera| {
            let e = g as usize - 1 + genera.len() - genera.iter().sum::<u32>() as usize;
            fill(g, genera, e)
        })
        .collect();
    Ok(sorted(found.into_iter().flatten()))
}

/// All graphs obtained from `g` by degenerating one vertex: trading one unit
/// of genus for a self-loop, or splitting the vertex in two joined by a new
/// edge while distributing its genus and branches. Only stable results are kept.
fn degenerations(g: &StableGraph) -> Vec<StableGraph> {
    let mut out = Vec::new();
    let n = g.vertex_count();
    for v in 0..n {
        let genus = g.vertices()[v].genus;
        if genus >= 1 {
            let mut vertices = g.vertices().to_vec();
            vertices[v].genus -= 1;
            let mut edges = g.edges().to_vec();
            edges.push(Edge::new(v, v, 1));
            out.push(StableGraph::new(vertices, edges).expect("adding a loop keeps the graph connected"));
        }
        // half-edges at v as (edge index, end index)
        let halves: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .enumerate()
            .flat_map(|(i, e)| (0..2).filter(move |&s| e.ends[s] == v).map(move |s| (i, s)))
            .collect();
        let h = halves.len();
        for mask in 0u32..(1 << h) {
            let moved = mask.count_ones() as usize;
            for g1 in 0..=genus {
                let g2 = genus - g1;
                // new vertex w receives the masked branches and genus g2
                if 2 * g1 as usize + (h - moved) + 1 < 3 || 2 * g2 as usize + moved + 1 < 3 {
                    continue;
                }
                let w = n;
                let mut vertices = g.vertices().to_vec();
                vertices[v].genus = g1;
                vertices.push(Vertex { genus: g2 });
                let mut edges = g.edges().to_vec();
                for (bit, &(ei, s)) in halves.iter().enumerate() {
                    if mask & (1 << bit) != 0 {
                        edges[ei].ends[s] = w;
                    }
                }
                edges.push(Edge::new(v, w, 1));
                let split = StableGraph::new(vertices, edges).expect("the new edge keeps the graph connected");
                debug_assert_eq!(split.stability_class(), StabilityClass::Stable);
                out.push(split);
            }
        }
    }
    out
}

/// All isomorphism classes of stable graphs of genus `g` (all thicknesses 1,
/// keys thickness-blind), optionally restricted to one edge count, sorted by
/// edge count then key.
pub fn enumerate_stable_graphs(g: u32, edges: Option<usize>) -> Result<Vec<GraphClass>> {
    let mut all = enumerate_by_degeneration(g, edges)?;
    if let Some(k) = edges {
        all.retain(|c| c.edge_count() == k);
    }
    Ok(all)
}

/// Stable graph classes of genus `g` built level by level from the smooth
/// curve by degenerations, up to `max_edges` edges (`None`: up to `3g - 3`).
pub fn enumerate_by_degeneration(g: u32, max_edges: Option<usize>) -> Result<Vec<GraphClass>> {
    guard(g)?;
    let limit = max_edges.unwrap_or(3 * g as usize - 3).min(3 * g as usize - 3);
    let smooth = StableGraph::from_parts(&[g], &[])?;
    let mut level: BTreeSet<GraphClass> = BTreeSet::from([canonical_form(&smooth, true)?]);
    let mut all: Vec<GraphClass> = level.iter().cloned().collect();
    for _ in 0..limit {
        let next: BTreeSet<GraphClass> = level
            .par_iter()
            .flat_map_iter(|class| {
                degenerations(&class.representative())
                    .into_iter()
                    .map(|d| canonical_form(&d, true).expect("vertex count within the canonical guard"))
            })
            .collect();
        all.extend(next.iter().cloned());
        level = next;
    }
    Ok(sorted(all))
}
