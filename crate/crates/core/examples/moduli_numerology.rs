//! Dimension counts around the moduli space of curves.
//!
//! ```bash
//! cargo run --example moduli_numerology -- 4
//! ```

use moduli::numerology::{canonical_hilbert, gieseker_parameters, hurwitz_genus, moduli_facts};

fn main() -> moduli::Result<()> {
    let g: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);

    for (key, value) in moduli_facts(g)?.report_lines() {
        println!("{key} = {value}");
    }

    println!("\n n  P(t)          rank  P^N");
    for n in 3..=6 {
        let e = canonical_hilbert(g, n)?;
        println!("{n:>2}  {:<12} {:>5}  {:>3}", e.poly.to_string(), e.rank, e.ambient_dim);
    }

    // Gieseker works with n-canonical curves, n >= 10; the two dimension
    // counts coincide there.
    let n = 10;
    let d = n * (2 * g - 2);
    if g >= 3 {
        let gp = gieseker_parameters(g, d)?;
        let ce = canonical_hilbert(g, n)?;
        println!(
            "\nGieseker at d = {d}: P^{} with P(t) = {} (10-canonical: P^{})",
            gp.ambient_dim, gp.poly, ce.ambient_dim
        );
    }

    // every curve of genus g is a simply branched cover of degree g + 2;
    // Riemann–Hurwitz says how many branch points that takes
    let k = moduli_facts(g)?.min_cover_degree;
    let b = 2 * (g - 1 + k);
    println!(
        "degree {k} covers with {b} branch points have genus {}",
        hurwitz_genus(k, b)?
    );
    Ok(())
}
