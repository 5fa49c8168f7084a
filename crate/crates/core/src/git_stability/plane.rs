use std::fmt;

use num::{BigRational, Zero};

use crate::error::{Error, Result};
use crate::exact_math::{homogeneous_components, Coord, TernaryForm};

/// Local type of a point of the projective plane relative to a curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointClass {
    NotOnCurve,
    SmoothPoint,
    /// Ordinary double point: vanishing linear jet, nondegenerate quadratic jet.
    Node,
    WorseSingularity,
}

impl PointClass {
    pub fn as_str(self) -> &'static str {
        match self {
            PointClass::NotOnCurve => "not_on_curve",
            PointClass::SmoothPoint => "smooth_point",
            PointClass::Node => "node",
            PointClass::WorseSingularity => "worse_singularity",
        }
    }
}

impl fmt::Display for PointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Chart used for a point: the last coordinate that does not vanish.
pub(crate) fn chart_for(p: &[BigRational; 3]) -> Result<Coord> {
    [Coord::Z, Coord::Y, Coord::X]
        .into_iter()
        .find(|c| !p[c.index()].is_zero())
        .ok_or_else(|| Error::domain("projective point (0:0:0) is not a point"))
}

pub fn classify_point(f: &TernaryForm, p: &[BigRational; 3]) -> Result<PointClass> {
    if f.is_zero() {
        return Err(Error::domain("the zero form does not define a curve"));
    }
    let chart = chart_for(p)?;
    let jets = homogeneous_components(f, chart, p)?;
    let vanishes = |k: usize| jets.get(k).is_none_or(|j| j.is_zero());
    if !vanishes(0) {
        return Ok(PointClass::NotOnCurve);
    }
    if !vanishes(1) {
        return Ok(PointClass::SmoothPoint);
    }
    let Some(quad) = jets.get(2) else {
        return Ok(PointClass::WorseSingularity);
    };
    // a2 u^2 + a1 u v + a0 v^2
    let (a0, a1, a2) = (quad.coeff(0), quad.coeff(1), quad.coeff(2));
    let disc = a1 * a1 - BigRational::from_integer(4.into()) * a2 * a0;
    Ok(if disc.is_zero() {
        PointClass::WorseSingularity
    } else {
        PointClass::Node
    })
}
