//! Combinatorial stable reduction on dual graphs.
//!
//! Starting from a stable graph with thick nodes, base change multiplies
//! every thickness, resolving replaces a node of thickness `k` by a chain
//! of `k - 1` rational curves, and stabilizing contracts those chains
//! again. Whatever order the contractions happen in, the stable model is
//! the one we started from.
//!
//! ```bash
//! cargo run --example stable_reduction
//! ```

use moduli::stable_graphs::{base_change, canonical_form, resolve, stabilize, stabilize_with, StableGraph};

fn describe(label: &str, g: &StableGraph) {
    println!(
        "{label:<14} V={:<3} E={:<3} genus {} {:<22} {}",
        g.vertex_count(),
        g.edge_count(),
        g.total_genus(),
        g.stability_class().as_str(),
        g.to_json_line()
    );
}

fn main() -> moduli::Result<()> {
    // genus 3: a genus-1 curve meeting a rational curve with a self-node twice
    let g = StableGraph::from_parts(&[1, 0], &[(0, 1, 2), (0, 1, 1), (1, 1, 3)])?;
    describe("start", &g);
    let bc = base_change(&g, 2)?;
    describe("base change 2", &bc);
    let res = resolve(&bc);
    describe("resolved", &res);
    let st = stabilize(&res)?;
    describe("stabilized", &st);

    // thicknesses come back multiplied by the base change degree
    let expected = canonical_form(&bc, false)?;
    println!(
        "equals the base-changed graph: {}",
        canonical_form(&st, false)? == expected
    );
    println!(
        "thickness-blind, equals the start: {}",
        canonical_form(&st, true)? == canonical_form(&g, true)?
    );

    // contract the last available vertex each time instead of the first
    let other = stabilize_with(&res, |n| n - 1)?;
    println!(
        "other contraction order agrees: {}",
        canonical_form(&other, false)? == expected
    );

    // a chain of two rational bridges between genus-1 tails contracts to one thick node
    let chain = StableGraph::from_parts(&[1, 0, 0, 1], &[(0, 1, 1), (1, 2, 2), (2, 3, 1)])?;
    describe("chain", &chain);
    describe("contracted", &stabilize(&chain)?);
    Ok(())
}
