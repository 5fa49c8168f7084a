use super::StabilityStatus;
use crate::error::{Error, Result};
use crate::exact_math::{squarefree_decomposition, BinaryForm};

/// Root multiplicity profile of a binary form on the projective line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiplicity {
    /// Largest multiplicity of any geometric root.
    pub m_star: u32,
    /// `(multiplicity, degree)` pairs: one per squarefree factor of the
    /// dehomogenization, plus `(mult, 1)` for the point `(1:0)` when it is a
    /// root. Sorted.
    pub witnesses: Vec<(u32, usize)>,
}

pub fn max_multiplicity(f: &BinaryForm) -> Result<Multiplicity> {
    if f.degree() == 0 {
        return Err(Error::domain("root multiplicities of a degree 0 form are undefined"));
    }
    let (p, at_infinity) = f.dehomogenize()?;
    let mut witnesses: Vec<(u32, usize)> = squarefree_decomposition(&p)?
        .into_iter()
        .map(|(a, m)| (m, a.degree().expect("nonconstant factor")))
        .collect();
    if at_infinity > 0 {
        witnesses.push((at_infinity as u32, 1));
    }
    witnesses.sort_unstable();
    let m_star = witnesses
        .iter()
        .map(|&(m, _)| m)
        .max()
        .expect("degree >= 1 form has a root");
    Ok(Multiplicity { m_star, witnesses })
}

/// `SL(2)` stability of a binary form of degree at least 3.
///
/// Forms of degree below 3 have positive-dimensional stabilizers, so the
/// orbit-dimension part of stability fails for them regardless of roots;
/// they are rejected rather than classified.
pub fn binary_form_stability(f: &BinaryForm) -> Result<StabilityStatus> {
    if f.is_zero() {
        return Err(Error::domain("stability of the zero form is undefined"));
    }
    let d = f.degree();
    if d < 3 {
        return Err(Error::domain(format!(
            "stability undefined at this degree under the orbit-dimension convention (degree {d} < 3)"
        )));
    }
    let twice = 2 * max_multiplicity(f)?.m_star as usize;
    Ok(match twice.cmp(&d) {
        std::cmp::Ordering::Less => StabilityStatus::Stable,
        std::cmp::Ordering::Equal => StabilityStatus::StrictlySemistable,
        std::cmp::Ordering::Greater => StabilityStatus::Unstable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::rat;

    fn product(factors: &[(i64, i64, u32)]) -> BinaryForm {
        factors.iter().fold(BinaryForm::from_ints(&[1]), |acc, &(a, b, m)| {
            acc.mul(&BinaryForm::linear(rat(a), rat(b)).pow(m))
        })
    }

    #[test]
    fn multiplicity_examples() {
        let m = max_multiplicity(&BinaryForm::from_ints(&[0, 0, 1, 0, 0])).unwrap();
        assert_eq!(m.m_star, 2);
        assert_eq!(m.witnesses, vec![(2, 1), (2, 1)]);

        // X0^3 (2 X0 + 5 X1)
        let f = product(&[(1, 0, 3), (2, 5, 1)]);
        assert_eq!(max_multiplicity(&f).unwrap().m_star, 3);

        let f = product(&[(1, 1, 1), (1, -1, 1), (2, 1, 1), (1, 3, 1)]);
        let m = max_multiplicity(&f).unwrap();
        assert_eq!(m.m_star, 1);
        assert_eq!(m.witnesses, vec![(1, 4)]);

        // X1^4: all multiplicity at (1:0)
        let m = max_multiplicity(&BinaryForm::from_ints(&[1, 0, 0, 0, 0])).unwrap();
        assert_eq!(m.witnesses, vec![(4, 1)]);
    }

    #[test]
    fn multiplicity_sees_irrational_roots() {
        // (X0^2 + X1^2)^2 X1: two conjugate double roots, one simple root at (1:0)
        let f = BinaryForm::from_ints(&[1, 0, 1])
            .pow(2)
            .mul(&BinaryForm::from_ints(&[1, 0]));
        let m = max_multiplicity(&f).unwrap();
        assert_eq!(m.m_star, 2);
        assert_eq!(m.witnesses, vec![(1, 1), (2, 2)]);
        assert_eq!(binary_form_stability(&f).unwrap(), StabilityStatus::Stable);
    }

    #[test]
    fn multiplicity_errors() {
        assert!(max_multiplicity(&BinaryForm::from_ints(&[3])).is_err());
        assert!(max_multiplicity(&BinaryForm::from_ints(&[0, 0, 0])).is_err());
    }

    #[test]
    fn quartic_trichotomy() {
        let stable = product(&[(1, 1, 1), (1, -1, 1), (1, 0, 1), (0, 1, 1)]);
        assert_eq!(binary_form_stability(&stable).unwrap(), StabilityStatus::Stable);
        assert_eq!(
            binary_form_stability(&BinaryForm::from_ints(&[0, 0, 1, 0, 0])).unwrap(),
            StabilityStatus::StrictlySemistable
        );
        assert_eq!(
            binary_form_stability(&BinaryForm::from_ints(&[0, 0, 0, 1, 0])).unwrap(),
            StabilityStatus::Unstable
        );
    }

    #[test]
    fn low_degree_rejected() {
        for c in [&[1, 1][..], &[1, 0, 1][..], &[5][..]] {
            assert!(matches!(
                binary_form_stability(&BinaryForm::from_ints(c)),
                Err(Error::Domain(_))
            ));
        }
        assert!(binary_form_stability(&BinaryForm::from_ints(&[0, 0, 0, 0])).is_err());
    }

    #[test]
    fn cubic_and_sextic() {
        // distinct roots cubic is stable; a double root in a cubic is unstable (4 > 3)
        assert_eq!(
            binary_form_stability(&product(&[(1, 0, 1), (0, 1, 1), (1, 1, 1)])).unwrap(),
            StabilityStatus::Stable
        );
        assert_eq!(
            binary_form_stability(&product(&[(1, 0, 2), (0, 1, 1)])).unwrap(),
            StabilityStatus::Unstable
        );
        // triple point on a sextic is the semistable boundary
        assert_eq!(
            binary_form_stability(&product(&[(1, 2, 3), (0, 1, 1), (1, 0, 1), (1, 1, 1)])).unwrap(),
            StabilityStatus::StrictlySemistable
        );
    }
}
