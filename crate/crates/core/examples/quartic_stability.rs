//! Hilbert–Mumford stability of binary quartics.
//!
//! Builds quartics from linear factors, prints the largest root
//! multiplicity and the resulting status, then shows the numerical
//! criterion at work: the diagonal one-parameter subgroup and its inverse,
//! before and after moving the worst root to `(1:0)`.
//!
//! ```bash
//! cargo run --example quartic_stability
//! ```

use moduli::exact_math::BinaryForm;
use moduli::git_stability::{binary_form_stability, lambda_status, max_multiplicity, monomial_weights, OnePS};
use moduli::BigRational;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Product of linear forms `a X0 + b X1`, each with a multiplicity.
fn product(factors: &[((i64, i64), u32)]) -> BinaryForm {
    factors.iter().fold(BinaryForm::constant(q(1)), |acc, &((a, b), m)| {
        acc.mul(&BinaryForm::linear(q(a), q(b)).pow(m))
    })
}

fn main() -> moduli::Result<()> {
    let x0 = (1, 0);
    let x1 = (0, 1);
    let cases = [
        (
            "four distinct roots",
            product(&[(x0, 1), (x1, 1), ((1, 1), 1), ((1, -1), 1)]),
        ),
        ("X0^2 X1^2", product(&[(x0, 2), (x1, 2)])),
        ("X0^2 X1 (X0 + X1)", product(&[(x0, 2), (x1, 1), ((1, 1), 1)])),
        ("(X0 - X1)^2 (X0 + 2 X1)^2", product(&[((1, -1), 2), ((1, 2), 2)])),
        ("X0^3 X1", product(&[(x0, 3), (x1, 1)])),
        ("X0^4", product(&[(x0, 4)])),
        ("x^4 + 1 (no rational roots)", BinaryForm::from_ints(&[1, 0, 0, 0, 1])),
    ];

    println!("{:<30} {:>7}  {:<20} status", "form", "m*", "coefficients a0..a4");
    for (name, f) in &cases {
        let m = max_multiplicity(f)?;
        let status = binary_form_stability(f)?;
        println!("{name:<30} {:>7}  {:<20} {status}", m.m_star, f.coeff_list());
    }

    let lam = OnePS::new(1)?;
    println!("\nweights of X0^i X1^(4-i) under r = 1: {:?}", monomial_weights(4, lam));

    // X0^3 X1 has weights {2, 4} for r = 1 and {-2, -4} for r = -1:
    // the inverse subgroup destabilizes it.
    let f = product(&[(x0, 3), (x1, 1)]);
    for l in [lam, lam.inverse()] {
        let r = lambda_status(&f, l)?;
        println!(
            "X0^3 X1, r = {:>2}: present {:?}, min {}, {}",
            l.weight(),
            r.weights_present,
            r.min_weight,
            r.status
        );
    }

    // A triple root at (1:1) is invisible to the diagonal subgroup until an
    // SL2 substitution moves it to (1:0).
    let g = product(&[((1, -1), 3), ((1, 1), 1)]);
    let to_infinity = [[q(1), q(0)], [q(1), q(1)]];
    let h = g.substitute(&to_infinity);
    for (label, form) in [("before", &g), ("after", &h)] {
        let worst = [lam, lam.inverse()]
            .into_iter()
            .map(|l| lambda_status(form, l).map(|r| r.min_weight))
            .collect::<moduli::Result<Vec<_>>>()?;
        println!(
            "(X0 - X1)^3 (X0 + X1) {label:<6} substitution: coeffs {}, min weights (r=1, r=-1) = {worst:?}, status {}",
            form.coeff_list(),
            binary_form_stability(form)?
        );
    }
    Ok(())
}
