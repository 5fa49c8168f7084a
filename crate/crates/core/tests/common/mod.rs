//! Brute-force oracles and random generators shared by the integration tests.
//!
//! Nothing here calls `canonical_form` or `automorphism_count`; isomorphism
//! and automorphisms are decided by trying every vertex permutation and
//! every half-edge matching.

#![allow(dead_code)]

use std::sync::OnceLock;

use moduli::exact_math::BinaryForm;
use moduli::stable_graphs::{enumerate_stable_graphs, GraphClass, StabilityClass, StableGraph};
use moduli::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

// ---------------------------------------------------------------------------
// binary forms

/// `prod (a X0 + b X1)^m` over the given factors.
pub fn form_from_factors(factors: &[((i64, i64), u32)]) -> BinaryForm {
    factors.iter().fold(BinaryForm::constant(q(1)), |acc, &((a, b), m)| {
        acc.mul(&BinaryForm::linear(q(a), q(b)).pow(m))
    })
}

/// Random pairwise non-proportional primitive linear forms.
pub fn distinct_linear_forms(rng: &mut impl Rng, count: usize) -> Vec<(i64, i64)> {
    let mut out: Vec<(i64, i64)> = Vec::new();
    while out.len() < count {
        let (a, b) = (rng.gen_range(-4..=4i64), rng.gen_range(-4..=4i64));
        if (a, b) == (0, 0) || out.iter().any(|&(c, d)| a * d == b * c) {
            continue;
        }
        out.push((a, b));
    }
    out
}

/// A random form of degree 3..=8 with rational roots of prescribed
/// multiplicities, optionally times `X0^2 + X1^2` (no rational roots).
/// Returns the form and the true maximal root multiplicity.
pub fn random_factored_form(rng: &mut impl Rng) -> (BinaryForm, u32) {
    loop {
        let with_quadratic = rng.gen_bool(0.3);
        let budget = rng.gen_range(3..=8u32) - if with_quadratic { 2 } else { 0 };
        let mut mults = Vec::new();
        let mut left = budget;
        while left > 0 {
            let m = rng.gen_range(1..=left);
            mults.push(m);
            left -= m;
        }
        let lines = distinct_linear_forms(rng, mults.len());
        let factors: Vec<((i64, i64), u32)> = lines.into_iter().zip(mults.iter().copied()).collect();
        let mut f = form_from_factors(&factors);
        if with_quadratic {
            f = f.mul(&BinaryForm::from_ints(&[1, 0, 1]));
        }
        if f.degree() < 3 {
            continue;
        }
        let c = q(rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 });
        return (
            f.scale(&c),
            mults.iter().copied().max().unwrap_or(0).max(u32::from(with_quadratic)),
        );
    }
}

/// Random element of SL2(Z) as a product of elementary matrices.
pub fn random_unimodular(rng: &mut impl Rng) -> [[i64; 2]; 2] {
    let mut m = [[1i64, 0], [0, 1]];
    for _ in 0..rng.gen_range(1..=6) {
        let k = rng.gen_range(-3..=3);
        let e = match rng.gen_range(0..3) {
            0 => [[1, k], [0, 1]],
            1 => [[1, 0], [k, 1]],
            _ => [[0, -1], [1, 0]],
        };
        m = [
            [
                m[0][0] * e[0][0] + m[0][1] * e[1][0],
                m[0][0] * e[0][1] + m[0][1] * e[1][1],
            ],
            [
                m[1][0] * e[0][0] + m[1][1] * e[1][0],
                m[1][0] * e[0][1] + m[1][1] * e[1][1],
            ],
        ];
    }
    assert_eq!(m[0][0] * m[1][1] - m[0][1] * m[1][0], 1);
    m
}

pub fn to_rational_matrix(m: [[i64; 2]; 2]) -> [[BigRational; 2]; 2] {
    [[q(m[0][0]), q(m[0][1])], [q(m[1][0]), q(m[1][1])]]
}

/// A determinant-one rational substitution under which `a X0 + b X1`
/// becomes a multiple of `X1`, i.e. its root moves to `(1:0)`.
pub fn root_to_infinity(a: i64, b: i64) -> [[BigRational; 2]; 2] {
    if b != 0 {
        [[q(b), q(0)], [q(-a), BigRational::new(1.into(), b.into())]]
    } else {
        [[q(0), q(-1)], [q(1), q(0)]]
    }
}

// ---------------------------------------------------------------------------
// graphs: brute-force isomorphism and automorphisms

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn edge_multiset(g: &StableGraph, perm: &[usize], thickness_blind: bool) -> Vec<(usize, usize, u32)> {
    let mut e: Vec<(usize, usize, u32)> = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (perm[e.ends[0]], perm[e.ends[1]]);
            (a.min(b), a.max(b), if thickness_blind { 1 } else { e.thickness })
        })
        .collect();
    e.sort_unstable();
    e
}

/// Isomorphism by trying every genus-preserving vertex bijection.
pub fn brute_isomorphic(g: &StableGraph, h: &StableGraph, thickness_blind: bool) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let identity: Vec<usize> = (0..h.vertex_count()).collect();
    let target = edge_multiset(h, &identity, thickness_blind);
    permutations(g.vertex_count()).into_iter().any(|p| {
        (0..g.vertex_count()).all(|v| g.vertices()[v].genus == h.vertices()[p[v]].genus)
            && edge_multiset(g, &p, thickness_blind) == target
    })
}

/// Automorphisms as permutations of half-edges that commute with the edge
/// involution, preserve thickness, and are induced by a genus-preserving
/// vertex permutation. A single vertex without edges has one automorphism.
pub fn brute_automorphisms(g: &StableGraph) -> u64 {
    // half-edge 2i and 2i+1 belong to edge i
    let vertex_of: Vec<usize> = g.edges().iter().flat_map(|e| e.ends).collect();
    let thickness: Vec<u32> = g.edges().iter().map(|e| e.thickness).collect();
    let n = vertex_of.len();
    let mut total = 0;
    for sigma in permutations(g.vertex_count()) {
        if (0..g.vertex_count()).any(|v| g.vertices()[v].genus != g.vertices()[sigma[v]].genus) {
            continue;
        }
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        total += count_matchings(0, &sigma, &vertex_of, &thickness, &mut image, &mut used);
    }
    total
}

fn count_matchings(
    h: usize,
    sigma: &[usize],
    vertex_of: &[usize],
    thickness: &[u32],
    image: &mut [usize],
    used: &mut [bool],
) -> u64 {
    if h == image.len() {
        return 1;
    }
    if image[h] != usize::MAX {
        return count_matchings(h + 1, sigma, vertex_of, thickness, image, used);
    }
    let partner = h ^ 1;
    let mut count = 0;
    for t in 0..image.len() {
        let tp = t ^ 1;
        if used[t] || used[tp] || vertex_of[t] != sigma[vertex_of[h]] || vertex_of[tp] != sigma[vertex_of[partner]] {
            continue;
        }
        if thickness[t / 2] != thickness[h / 2] {
            continue;
        }
        image[h] = t;
        image[partner] = tp;
        used[t] = true;
        used[tp] = true;
        count += count_matchings(h + 1, sigma, vertex_of, thickness, image, used);
        image[h] = usize::MAX;
        image[partner] = usize::MAX;
        used[t] = false;
        used[tp] = false;
    }
    count
}

/// Stable graphs of genus `g` by exhaustive search: every genus vector,
/// every multiset of edges with the forced edge count, filtered by
/// connectivity and stability, deduplicated by brute-force isomorphism.
/// `edges` restricts to one edge count.
pub fn brute_stable_graphs(g: u32, edges: Option<usize>) -> Vec<StableGraph> {
    let mut reps: Vec<StableGraph> = Vec::new();
    for v in 1..=(2 * g as usize - 2).max(1) {
        let pairs: Vec<(usize, usize)> = (0..v).flat_map(|i| (i..v).map(move |j| (i, j))).collect();
        for genera in all_vectors(v, g) {
            let sum: u32 = genera.iter().sum();
            let Some(e) = (g as usize + v).checked_sub(1 + sum as usize) else {
                continue;
            };
            if edges.is_some_and(|k| k != e) {
                continue;
            }
            for multiset in multisets(pairs.len(), e) {
                let es: Vec<(usize, usize, u32)> = multiset.iter().map(|&p| (pairs[p].0, pairs[p].1, 1)).collect();
                let Ok(graph) = StableGraph::from_parts(&genera, &es) else {
                    continue;
                };
                if graph.stability_class() != StabilityClass::Stable || graph.total_genus() != g {
                    continue;
                }
                if !reps.iter().any(|r| brute_isomorphic(r, &graph, true)) {
                    reps.push(graph);
                }
            }
        }
    }
    reps
}

/// All vectors of length `v` with entries summing to at most `max_sum`.
fn all_vectors(v: usize, max_sum: u32) -> Vec<Vec<u32>> {
    if v == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for x in 0..=max_sum {
        for mut rest in all_vectors(v - 1, max_sum - x) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// Non-decreasing index sequences of length `k` over `0..n`.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

// ---------------------------------------------------------------------------
// random stable graphs

pub fn classes(g: u32) -> &'static [GraphClass] {
    static CACHE: OnceLock<Vec<Vec<GraphClass>>> = OnceLock::new();
    let all = CACHE.get_or_init(|| (2..=5).map(|g| enumerate_stable_graphs(g, None).unwrap()).collect());
    &all[(g - 2) as usize]
}

/// A uniformly chosen stable graph class of genus `g`, with shuffled vertex
/// labels, shuffled edge order, swapped edge ends and random thicknesses
/// in `1..=max_thickness`.
pub fn random_stable_graph(rng: &mut impl Rng, g: u32, max_thickness: u32) -> StableGraph {
    let rep = classes(g).choose(rng).unwrap().representative();
    let mut perm: Vec<usize> = (0..rep.vertex_count()).collect();
    perm.shuffle(rng);
    let mut genera = vec![0; rep.vertex_count()];
    for (v, vert) in rep.vertices().iter().enumerate() {
        genera[perm[v]] = vert.genus;
    }
    let mut edges: Vec<(usize, usize, u32)> = rep
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (perm[e.ends[0]], perm[e.ends[1]]);
            let (a, b) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
            (a, b, rng.gen_range(1..=max_thickness))
        })
        .collect();
    edges.shuffle(rng);
    StableGraph::from_parts(&genera, &edges).unwrap()
}
