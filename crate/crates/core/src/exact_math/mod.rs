//! Exact rational arithmetic: univariate polynomials over `Q`, binary and
//! ternary forms, and the local jet expansion of a plane curve at a point.
//!
//! Everything is computed over [`BigRational`]; nothing is ever rounded.
//! Geometric root multiplicities are read off the squarefree decomposition,
//! which is valid over the algebraic closure in characteristic zero.

mod forms;
mod poly;

pub use forms::{
    binary_to_unipoly, homogeneous_components, BinaryForm, Coord, TermRecord, TernaryForm, TernaryFormFile,
};
pub use poly::{poly_gcd, squarefree_decomposition, UniPoly};

use crate::error::{Error, Result};
use num::{BigRational, Zero};

/// Parses a rational written as `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::parse("empty rational"));
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: num::BigInt = n
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad numerator in {s:?}")))?;
        let d: num::BigInt = d
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad denominator in {s:?}")))?;
        if d.is_zero() {
            return Err(Error::parse(format!("zero denominator in {s:?}")));
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: num::BigInt = s.parse().map_err(|_| Error::parse(format!("bad rational {s:?}")))?;
        Ok(BigRational::from_integer(n))
    }
}

/// Formats a rational as `p` or `p/q` (the inverse of [`parse_rational`]).
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses a projective point written `x:y:z` with rational coordinates.
pub fn parse_point(s: &str) -> Result<[BigRational; 3]> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::parse(format!(
            "point {s:?} must have three coordinates separated by ':'"
        )));
    }
    let coords = [
        parse_rational(parts[0])?,
        parse_rational(parts[1])?,
        parse_rational(parts[2])?,
    ];
    if coords.iter().all(Zero::is_zero) {
        return Err(Error::domain("projective point (0:0:0) is not a point"));
    }
    Ok(coords)
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
