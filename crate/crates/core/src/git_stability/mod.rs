//! Stability of binary forms under `SL(2)` and point classification on
//! plane curves.
//!
//! A diagonal one-parameter subgroup acts by `X0 -> t^r X0`, `X1 -> t^-r X1`,
//! so the monomial `X0^i X1^(d-i)` has weight `r (2i - d)`. A form is
//! λ-semistable when some monomial present in it has weight `<= 0` and
//! λ-stable when some present monomial has weight `< 0`.
//!
//! Quantifying over every 1-PS amounts to moving each point of the
//! projective line to `(0:1)` or `(1:0)`, which leads to the basis-free
//! criterion implemented by [`binary_form_stability`]: with `m*` the largest
//! root multiplicity of a degree `d` form, the form is stable when
//! `2 m* < d`, strictly semistable when `2 m* = d`, and unstable otherwise.
//! `SL(2)` and `PGL(2)` give the same answer since their orbits on forms up
//! to scale coincide.

mod binary;
mod plane;

pub use binary::{binary_form_stability, max_multiplicity, Multiplicity};
pub use plane::{classify_point, PointClass};

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact_math::BinaryForm;

/// GIT status of a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StabilityStatus {
    Stable,
    StrictlySemistable,
    Unstable,
}

impl StabilityStatus {
    pub fn is_semistable(self) -> bool {
        !matches!(self, StabilityStatus::Unstable)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            StabilityStatus::Stable => "stable",
            StabilityStatus::StrictlySemistable => "strictly_semistable",
            StabilityStatus::Unstable => "unstable",
        }
    }
}

impl fmt::Display for StabilityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Diagonal one-parameter subgroup of `SL(2)` with weights `(r, -r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OnePS(i64);

impl OnePS {
    pub fn new(r: i64) -> Result<Self> {
        if r == 0 {
            return Err(Error::domain("the one-parameter subgroup weight r must be nonzero"));
        }
        Ok(OnePS(r))
    }

    pub fn weight(self) -> i64 {
        self.0
    }

    /// The subgroup with the roles of `X0` and `X1` exchanged.
    pub fn inverse(self) -> Self {
        OnePS(-self.0)
    }
}

/// Verdict for a single one-parameter subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LambdaStatus {
    LambdaStable,
    LambdaSemistable,
    LambdaUnstable,
}

impl LambdaStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            LambdaStatus::LambdaStable => "lambda_stable",
            LambdaStatus::LambdaSemistable => "lambda_semistable",
            LambdaStatus::LambdaUnstable => "lambda_unstable",
        }
    }

    /// λ-stability implies λ-semistability.
    pub fn is_semistable(self) -> bool {
        !matches!(self, LambdaStatus::LambdaUnstable)
    }

    pub fn is_stable(self) -> bool {
        matches!(self, LambdaStatus::LambdaStable)
    }
}

impl fmt::Display for LambdaStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaReport {
    pub weights_present: BTreeSet<i64>,
    pub min_weight: i64,
    pub status: LambdaStatus,
}

/// Weights `r (2i - d)` of the monomials `X0^i X1^(d-i)`, indexed by `i`.
pub fn monomial_weights(d: usize, lam: OnePS) -> Vec<i64> {
    let d = d as i64;
    (0..=d).map(|i| lam.0 * (2 * i - d)).collect()
}

pub fn lambda_status(f: &BinaryForm, lam: OnePS) -> Result<LambdaReport> {
    if f.is_zero() {
        return Err(Error::domain("λ-weights of the zero form are undefined"));
    }
    let weights = monomial_weights(f.degree(), lam);
    let weights_present: BTreeSet<i64> = f
        .coeffs()
        .iter()
        .zip(&weights)
        .filter(|(a, _)| !num::Zero::is_zero(*a))
        .map(|(_, &w)| w)
        .collect();
    let min_weight = *weights_present.first().expect("nonzero form has a monomial");
    let status = if min_weight < 0 {
        LambdaStatus::LambdaStable
    } else if min_weight == 0 {
        LambdaStatus::LambdaSemistable
    } else {
        LambdaStatus::LambdaUnstable
    };
    Ok(LambdaReport {
        weights_present,
        min_weight,
        status,
    })
}
