//! Singular points of plane curves.
//!
//! The quartic family `x^4 + x y z^2 + y^4 + t (z^4 + z^3 x + z^3 y + z^2 y^2)`
//! has a node at `(0:0:1)` when `t = 0`; for `t != 0` the point is not on
//! the curve at all. A few
//! more curves show the other classes.
//!
//! ```bash
//! cargo run --example node_detection
//! ```

use moduli::exact_math::{parse_point, TernaryForm};
use moduli::git_stability::classify_point;

fn main() -> moduli::Result<()> {
    let family = |t: i64| {
        TernaryForm::from_int_terms(
            4,
            &[
                ([4, 0, 0], 1),
                ([1, 1, 2], 1),
                ([0, 4, 0], 1),
                ([0, 0, 4], t),
                ([1, 0, 3], t),
                ([0, 1, 3], t),
                ([0, 2, 2], t),
            ],
        )
    };
    let origin = parse_point("0:0:1")?;
    for t in [0, 1] {
        let f = family(t)?;
        println!("t = {t}: (0:0:1) is {}", classify_point(&f, &origin)?);
    }

    let cases = [
        // y^2 z = x^3 + x^2 z
        (
            "nodal cubic",
            TernaryForm::from_int_terms(3, &[([0, 2, 1], 1), ([3, 0, 0], -1), ([2, 0, 1], -1)])?,
            "0:0:1",
        ),
        (
            "cuspidal cubic",
            TernaryForm::from_int_terms(3, &[([0, 2, 1], 1), ([3, 0, 0], -1)])?,
            "0:0:1",
        ),
        // x^2 + y^2 = 0 is still a node; the branches are only defined over Q(i)
        (
            "conjugate node",
            TernaryForm::from_int_terms(2, &[([2, 0, 0], 1), ([0, 2, 0], 1)])?,
            "0:0:1",
        ),
        (
            "tacnode y^2 = x^4",
            TernaryForm::from_int_terms(4, &[([0, 2, 2], 1), ([4, 0, 0], -1)])?,
            "0:0:1",
        ),
        (
            "triple point",
            TernaryForm::from_int_terms(3, &[([3, 0, 0], 1), ([0, 3, 0], 1)])?,
            "0:0:1",
        ),
        (
            "Fermat cubic",
            TernaryForm::from_int_terms(3, &[([3, 0, 0], 1), ([0, 3, 0], 1), ([0, 0, 3], -1)])?,
            "1:0:1",
        ),
        (
            "line at infinity",
            TernaryForm::from_int_terms(1, &[([0, 0, 1], 1)])?,
            "1:-2:0",
        ),
    ];
    for (name, f, p) in &cases {
        println!("{name:<18} at ({p}): {}", classify_point(f, &parse_point(p)?)?);
    }
    Ok(())
}
