//! Counts stable graphs by genus and edge number with both generators.
//!
//! ```bash
//! cargo run --release --example stable_graph_census -- 4
//! ```

use std::collections::BTreeMap;
use std::time::Instant;

use moduli::stable_graphs::{automorphism_count, enumerate_by_partition, enumerate_stable_graphs};
use moduli::BigRational;

fn main() -> moduli::Result<()> {
    let max_genus: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    for g in 2..=max_genus {
        let start = Instant::now();
        let classes = enumerate_stable_graphs(g, None)?;
        let degen_time = start.elapsed();
        let start = Instant::now();
        let again = enumerate_by_partition(g, None)?;
        let fill_time = start.elapsed();

        let mut by_edges: BTreeMap<usize, usize> = BTreeMap::new();
        for c in &classes {
            *by_edges.entry(c.edge_count()).or_default() += 1;
        }
        // orbifold-style count: each class weighted by 1/|Aut|
        let mut mass = BigRational::from_integer(0.into());
        for c in &classes {
            let aut = automorphism_count(&c.representative())?;
            mass += BigRational::new(1.into(), aut.into());
        }

        println!(
            "genus {g}: {} classes ({degen_time:.2?} by degeneration, {fill_time:.2?} by matrix filling)",
            classes.len()
        );
        println!("  generators agree: {}", classes == again);
        println!("  by edge count: {by_edges:?}");
        println!(
            "  boundary divisors (1 edge): {}",
            by_edges.get(&1).copied().unwrap_or(0)
        );
        println!("  sum of 1/|Aut|: {mass}");
    }
    Ok(())
}
