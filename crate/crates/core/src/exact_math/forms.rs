use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{format_rational, parse_rational, rat, UniPoly};
use crate::error::{Error, Result};

/// Homogeneous polynomial `sum_i a_i X0^i X1^(d-i)` of degree `d`.
///
/// The coefficient list is stored in the order `a_0, ..., a_d`, so `a_i`
/// multiplies `X0^i X1^(d-i)`. The zero form is representable; operations
/// that need a nonzero form check for it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<BigRational>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::domain("a binary form of degree d needs d+1 coefficients"));
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect()).expect("nonempty coefficient list")
    }

    /// Parses a comma separated list `a_0,...,a_d` of rationals.
    pub fn parse_coeffs(s: &str) -> Result<Self> {
        let coeffs = s.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        Self::new(coeffs)
    }

    /// The linear form `x0 * X0 + x1 * X1`.
    pub fn linear(x0: BigRational, x1: BigRational) -> Self {
        BinaryForm { coeffs: vec![x1, x0] }
    }

    pub fn constant(c: BigRational) -> Self {
        BinaryForm { coeffs: vec![c] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `X0^i X1^(d-i)`.
    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BinaryForm { coeffs: out }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(BigRational::one()), |acc, _| acc.mul(self))
    }

    /// Linear change of variables `f(m00*X0 + m01*X1, m10*X0 + m11*X1)`.
    pub fn substitute(&self, m: &[[BigRational; 2]; 2]) -> Self {
        let d = self.degree();
        let x0_image = Self::linear(m[0][0].clone(), m[0][1].clone());
        let x1_image = Self::linear(m[1][0].clone(), m[1][1].clone());
        let mut out = vec![BigRational::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let term = x0_image.pow(i as u32).mul(&x1_image.pow((d - i) as u32));
            for (k, c) in term.coeffs.iter().enumerate() {
                out[k] += a * c;
            }
        }
        BinaryForm { coeffs: out }
    }

    /// Dehomogenizes at `X1 = 1`.
    ///
    /// Returns `p(x) = f(x, 1)` together with the multiplicity of the root
    /// `(1:0)`, which is the power of `X1` dividing `f` and equals
    /// `d - deg p`.
    pub fn dehomogenize(&self) -> Result<(UniPoly, usize)> {
        if self.is_zero() {
            return Err(Error::domain("dehomogenizing the zero form"));
        }
        let p = UniPoly::new(self.coeffs.clone());
        let deg = p.degree().expect("nonzero form");
        Ok((p, self.degree() - deg))
    }

    /// Comma separated `a_0,...,a_d`, the format accepted by [`Self::parse_coeffs`].
    pub fn coeff_list(&self) -> String {
        self.coeffs.iter().map(format_rational).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let abs = c.abs();
            let mut factors = Vec::new();
            if !abs.is_one() || d == 0 {
                factors.push(format_rational(&abs));
            }
            for (var, e) in [("X0", i), ("X1", d - i)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Free-function form of [`BinaryForm::dehomogenize`].
pub fn binary_to_unipoly(f: &BinaryForm) -> Result<(UniPoly, usize)> {
    f.dehomogenize()
}

/// Homogeneous polynomial in `x, y, z` stored sparsely by exponent triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryForm {
    degree: u32,
    terms: BTreeMap<[u32; 3], BigRational>,
}

impl TernaryForm {
    pub fn new(degree: u32, terms: impl IntoIterator<Item = ([u32; 3], BigRational)>) -> Result<Self> {
        let mut map: BTreeMap<[u32; 3], BigRational> = BTreeMap::new();
        for (e, c) in terms {
            if e.iter().sum::<u32>() != degree {
                return Err(Error::domain(format!(
                    "monomial exponents {e:?} do not sum to the degree {degree}"
                )));
            }
            *map.entry(e).or_insert_with(BigRational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(TernaryForm { degree, terms: map })
    }

    pub fn from_int_terms(degree: u32, terms: &[([u32; 3], i64)]) -> Result<Self> {
        Self::new(degree, terms.iter().map(|&(e, c)| (e, rat(c))))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of two forms of the same degree.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::domain("adding ternary forms of different degrees"));
        }
        Self::new(
            self.degree,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(e, c)| (*e, c.clone())),
        )
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.degree, self.terms.iter().map(|(e, a)| (*e, a * c))).expect("degree unchanged")
    }

    pub fn eval(&self, p: &[BigRational; 3]) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (e, c)| {
            let mut t = c.clone();
            for (x, &k) in p.iter().zip(e) {
                t *= num::pow(x.clone(), k as usize);
            }
            acc + t
        })
    }

    pub fn from_file(file: &TernaryFormFile) -> Result<Self> {
        let terms = file
            .terms
            .iter()
            .map(|t| Ok((t.exponents, parse_rational(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(file.degree, terms)
    }

    pub fn to_file(&self) -> TernaryFormFile {
        TernaryFormFile {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermRecord {
                    exponents: *e,
                    coeff: format_rational(c),
                })
                .collect(),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: TernaryFormFile =
            serde_json::from_str(s).map_err(|e| Error::parse(format!("ternary form file: {e}")))?;
        Self::from_file(&file)
    }
}

/// On-disk layout of a ternary form: `{"degree": d, "terms": [{"exponents": [i,j,k], "coeff": "p/q"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TernaryFormFile {
    pub degree: u32,
    pub terms: Vec<TermRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermRecord {
    pub exponents: [u32; 3],
    pub coeff: String,
}

/// Affine chart of the projective plane, named by the coordinate set to 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coord {
    X,
    Y,
    Z,
}

impl Coord {
    pub fn index(self) -> usize {
        match self {
            Coord::X => 0,
            Coord::Y => 1,
            Coord::Z => 2,
        }
    }

    /// The two remaining coordinates, in order; they become the local variables.
    pub fn local_indices(self) -> [usize; 2] {
        match self {
            Coord::X => [1, 2],
            Coord::Y => [0, 2],
            Coord::Z => [0, 1],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Coord::X => "x",
            Coord::Y => "y",
            Coord::Z => "z",
        }
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Graded pieces of `f` around `center` in the given chart.
///
/// `f` is dehomogenized by setting the chart coordinate to 1, the center is
/// moved to the origin, and the resulting polynomial in the two local
/// variables `(u, v)` is split by total degree. Entry `k` is the degree-`k`
/// piece as a [`BinaryForm`] with `u` in the role of `X0`; there are
/// `deg f + 1` entries, some of which may be zero.
pub fn homogeneous_components(f: &TernaryForm, chart: Coord, center: &[BigRational; 3]) -> Result<Vec<BinaryForm>> {
    let c = chart.index();
    if center[c].is_zero() {
        return Err(Error::domain(format!(
            "point does not lie in the chart {} = 1",
            chart.name()
        )));
    }
    let [iu, iv] = chart.local_indices();
    let u0 = &center[iu] / &center[c];
    let v0 = &center[iv] / &center[c];
    let d = f.degree as usize;
    let mut pieces: Vec<Vec<BigRational>> = (0..=d).map(|k| vec![BigRational::zero(); k + 1]).collect();
    for (e, coeff) in &f.terms {
        let (a, b) = (e[iu], e[iv]);
        for p in 0..=a {
            let cu = BigRational::from_integer(binomial(a, p)) * num::pow(u0.clone(), (a - p) as usize);
            if cu.is_zero() {
                continue;
            }
            for q in 0..=b {
                let cv = BigRational::from_integer(binomial(b, q)) * num::pow(v0.clone(), (b - q) as usize);
                if cv.is_zero() {
                    continue;
                }
                pieces[(p + q) as usize][p as usize] += coeff * &cu * cv;
            }
        }
    }
    Ok(pieces.into_iter().map(|coeffs| BinaryForm { coeffs }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quartic_with_node() -> TernaryForm {
        // x^4 + x y z^2 + y^4
        TernaryForm::from_int_terms(4, &[([4, 0, 0], 1), ([1, 1, 2], 1), ([0, 4, 0], 1)]).unwrap()
    }

    #[test]
    fn dehomogenize_monomials() {
        let (p, m) = BinaryForm::from_ints(&[0, 0, 1, 0, 0]).dehomogenize().unwrap();
        assert_eq!(p, UniPoly::from_ints(&[0, 0, 1]));
        assert_eq!(m, 2);
        // X1^4 vanishes only at (1:0), to order 4
        let (p, m) = BinaryForm::from_ints(&[1, 0, 0, 0, 0]).dehomogenize().unwrap();
        assert_eq!(p, UniPoly::one());
        assert_eq!(m, 4);
        let (p, m) = BinaryForm::from_ints(&[0, 0, 0, 0, 1]).dehomogenize().unwrap();
        assert_eq!(p.degree(), Some(4));
        assert_eq!(m, 0);
        assert!(BinaryForm::from_ints(&[0, 0]).dehomogenize().is_err());
    }

    #[test]
    fn dehomogenize_distinct_roots() {
        // (X0 - X1)(X0 - 2X1)(X0 + X1)(X0 + 3X1)
        let f = [(1, -1), (1, -2), (1, 1), (1, 3)]
            .iter()
            .fold(BinaryForm::from_ints(&[1]), |acc, &(a, b)| {
                acc.mul(&BinaryForm::linear(rat(a), rat(b)))
            });
        let (p, m) = binary_to_unipoly(&f).unwrap();
        assert_eq!(m, 0);
        for r in [1, 2, -1, -3] {
            assert!(p.eval(&rat(r)).is_zero());
        }
        assert_eq!(p.degree(), Some(4));
    }

    #[test]
    fn substitution_identity_and_swap() {
        let f = BinaryForm::from_ints(&[1, 2, 3]);
        let id = [[rat(1), rat(0)], [rat(0), rat(1)]];
        assert_eq!(f.substitute(&id), f);
        // X0 <-> X1 reverses the coefficient list
        let swap = [[rat(0), rat(1)], [rat(1), rat(0)]];
        assert_eq!(f.substitute(&swap), BinaryForm::from_ints(&[3, 2, 1]));
        // X0 -> X0 + X1 on X0^2: (X0 + X1)^2
        let shear = [[rat(1), rat(1)], [rat(0), rat(1)]];
        assert_eq!(
            BinaryForm::from_ints(&[0, 0, 1]).substitute(&shear),
            BinaryForm::from_ints(&[1, 2, 1])
        );
    }

    #[test]
    fn display_binary() {
        assert_eq!(BinaryForm::from_ints(&[0, 0, 1, 0, 0]).to_string(), "X0^2*X1^2");
        assert_eq!(BinaryForm::from_ints(&[-1, 0, 2]).to_string(), "2*X0^2 - X1^2");
        assert_eq!(BinaryForm::from_ints(&[0, 0]).to_string(), "0");
    }

    #[test]
    fn ternary_rejects_bad_exponents() {
        assert!(TernaryForm::from_int_terms(4, &[([1, 1, 1], 1)]).is_err());
        let f = TernaryForm::from_int_terms(2, &[([1, 1, 0], 1), ([1, 1, 0], -1)]).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn jets_of_nodal_quartic() {
        let f = quartic_with_node();
        let center = [rat(0), rat(0), rat(1)];
        let parts = homogeneous_components(&f, Coord::Z, &center).unwrap();
        assert_eq!(parts.len(), 5);
        assert!(parts[0].is_zero());
        assert!(parts[1].is_zero());
        assert_eq!(parts[2], BinaryForm::from_ints(&[0, 1, 0]));
        assert!(parts[3].is_zero());
        assert_eq!(parts[4], BinaryForm::from_ints(&[1, 0, 0, 0, 1]));
    }

    #[test]
    fn jets_simple_cases() {
        let center = [rat(0), rat(0), rat(1)];
        let zd = TernaryForm::from_int_terms(3, &[([0, 0, 3], 1)]).unwrap();
        let parts = homogeneous_components(&zd, Coord::Z, &center).unwrap();
        assert_eq!(parts[0], BinaryForm::from_ints(&[1]));
        let xz3 = TernaryForm::from_int_terms(4, &[([1, 0, 3], 1)]).unwrap();
        let parts = homogeneous_components(&xz3, Coord::Z, &center).unwrap();
        assert!(parts[0].is_zero());
        assert_eq!(parts[1], BinaryForm::from_ints(&[0, 1]));
        assert!(homogeneous_components(&xz3, Coord::X, &center).is_err());
    }

    #[test]
    fn jets_translate_center() {
        // y z - x^2 at (1:1:1): local u = x-1, v = y-1 in chart z gives
        // (v+1) - (u+1)^2 = v - 2u - u^2
        let f = TernaryForm::from_int_terms(2, &[([0, 1, 1], 1), ([2, 0, 0], -1)]).unwrap();
        let parts = homogeneous_components(&f, Coord::Z, &[rat(2), rat(2), rat(2)]).unwrap();
        assert!(parts[0].is_zero());
        assert_eq!(parts[1], BinaryForm::from_ints(&[1, -2]));
        assert_eq!(parts[2], BinaryForm::from_ints(&[0, 0, -1]));
    }

    #[test]
    fn ternary_file_round_trip() {
        let f = quartic_with_node();
        let json = serde_json::to_string(&f.to_file()).unwrap();
        assert_eq!(TernaryForm::from_json(&json).unwrap(), f);
        assert!(TernaryForm::from_json(r#"{"degree": 2, "terms": [{"exponents": [1,1,1], "coeff": "1"}]}"#).is_err());
        assert!(TernaryForm::from_json(r#"{"degree": 2}"#).is_err());
    }
}
