//! Integer numerology of moduli of curves.
//!
//! * Pluricanonical embedding (`n >= 3`): `pi_* omega^n` has rank
//!   `(2n - 1)(g - 1)`, the curve sits in `P^N` with `N = rank - 1`, and its
//!   Hilbert polynomial is `P(t) = 2n(g - 1) t - (g - 1)`.
//! * Gieseker's setup: degree `d >= 20(g - 1)`, `g >= 3`, curves in
//!   `P^(d - g)` with Hilbert polynomial `d t - g + 1`.
//! * Riemann–Hurwitz for a degree `k` cover of the line with `b` simple
//!   branch points: `g = b/2 - k + 1`.
//!
//! All arithmetic is exact on `i64`.

use std::fmt;

use crate::error::{Error, Result};

/// `P(t) = linear * t + constant`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HilbertPoly {
    pub linear: i64,
    pub constant: i64,
}

impl HilbertPoly {
    pub fn eval(&self, t: i64) -> i64 {
        self.linear * t + self.constant
    }
}

impl fmt::Display for HilbertPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.constant {
            0 => write!(f, "{}t", self.linear),
            c if c < 0 => write!(f, "{}t - {}", self.linear, -c),
            c => write!(f, "{}t + {}", self.linear, c),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CanonicalEmbedding {
    pub poly: HilbertPoly,
    pub rank: i64,
    pub ambient_dim: i64,
}

fn check_genus(g: i64) -> Result<()> {
    if g < 2 {
        return Err(Error::domain(format!("genus must be at least 2, got {g}")));
    }
    Ok(())
}

pub fn canonical_hilbert(g: i64, n: i64) -> Result<CanonicalEmbedding> {
    check_genus(g)?;
    if n < 3 {
        return Err(Error::domain(format!(
            "omega^n is relatively very ample only for n >= 3, got n = {n}"
        )));
    }
    let rank = (2 * n - 1) * (g - 1);
    Ok(CanonicalEmbedding {
        poly: HilbertPoly {
            linear: 2 * n * (g - 1),
            constant: -(g - 1),
        },
        rank,
        ambient_dim: rank - 1,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GiesekerParameters {
    /// Projective dimension `N = d - g` of the ambient space.
    pub ambient_dim: i64,
    pub poly: HilbertPoly,
}

pub fn gieseker_parameters(g: i64, d: i64) -> Result<GiesekerParameters> {
    if g < 3 {
        return Err(Error::domain(format!(
            "Gieseker's construction needs g >= 3, got g = {g}"
        )));
    }
    if d < 20 * (g - 1) {
        return Err(Error::domain(format!(
            "Gieseker's construction needs d >= 20(g - 1) = {}, got d = {d}",
            20 * (g - 1)
        )));
    }
    Ok(GiesekerParameters {
        ambient_dim: d - g,
        poly: HilbertPoly {
            linear: d,
            constant: 1 - g,
        },
    })
}

/// Genus of a degree `k` cover of the line simply branched over `b` points.
pub fn hurwitz_genus(k: i64, b: i64) -> Result<i64> {
    if k < 2 {
        return Err(Error::domain(format!("cover degree must be at least 2, got {k}")));
    }
    if b < 0 || b % 2 != 0 {
        return Err(Error::domain(format!(
            "the number of branch points must be even and nonnegative, got {b}"
        )));
    }
    let g = b / 2 - k + 1;
    if g < 0 {
        return Err(Error::domain(format!(
            "no connected cover: degree {k} with {b} branch points gives genus {g}"
        )));
    }
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModuliFacts {
    pub g: i64,
    /// `dim M_g = 3g - 3`.
    pub dimension: i64,
    /// Number of boundary divisors of the compactification: one for each
    /// stable graph with a single edge.
    pub boundary_divisor_count: i64,
    /// Complete subvarieties of `M_g` have dimension at most `g - 2`.
    pub diaz_bound: i64,
    /// `M_g` is known to be of general type (g > 23).
    pub general_type_known: bool,
    /// `M_g` is known to be unirational (g <= 10).
    pub unirationality_known: bool,
    /// Smallest cover degree `k > g + 1` for which every curve is a simply
    /// branched cover of the line.
    pub min_cover_degree: i64,
}

pub fn moduli_facts(g: i64) -> Result<ModuliFacts> {
    check_genus(g)?;
    Ok(ModuliFacts {
        g,
        dimension: 3 * g - 3,
        boundary_divisor_count: g / 2 + 1,
        diaz_bound: g - 2,
        general_type_known: g > 23,
        unirationality_known: g <= 10,
        min_cover_degree: g + 2,
    })
}

impl ModuliFacts {
    /// `key = value` lines in field order.
    pub fn report_lines(&self) -> Vec<(&'static str, String)> {
        vec![
            ("g", self.g.to_string()),
            ("dimension", self.dimension.to_string()),
            ("boundary_divisor_count", self.boundary_divisor_count.to_string()),
            ("diaz_bound", self.diaz_bound.to_string()),
            ("general_type_known", self.general_type_known.to_string()),
            ("unirationality_known", self.unirationality_known.to_string()),
            ("min_cover_degree", self.min_cover_degree.to_string()),
        ]
    }
}
