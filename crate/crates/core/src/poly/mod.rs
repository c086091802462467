//! Sparse multivariate polynomials with arbitrary-precision integer coefficients.

mod divided;
mod schubert;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::convex::LatticePointSet;
use crate::error::{Error, Result};
use crate::vector::ExponentVector;

pub use divided::{divided_difference, isobaric_divided_difference};
pub use schubert::{
    descent_path, grothendieck_along, grothendieck_rec, homogenize_support, poly_from_pipe_dreams,
    schubert_along, schubert_and_grothendieck, schubert_rec, staircase_monomial, AscentRule,
};

/// A polynomial in `x_1, …, x_{n_vars}`. Zero coefficients are never stored;
/// terms iterate in lexicographic order of exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    n_vars: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl SparsePolynomial {
    pub fn zero(n_vars: usize) -> Self {
        SparsePolynomial { n_vars, terms: BTreeMap::new() }
    }

    pub fn one(n_vars: usize) -> Self {
        Self::monomial(ExponentVector::zeros(n_vars), BigInt::one())
    }

    pub fn monomial(exp: ExponentVector, coef: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, coef.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, combining repeats.
    pub fn from_terms<C: Into<BigInt>>(
        n_vars: usize,
        terms: impl IntoIterator<Item = (ExponentVector, C)>,
    ) -> Result<Self> {
        let mut p = Self::zero(n_vars);
        for (exp, coef) in terms {
            if exp.len() != n_vars {
                return Err(Error::DimensionMismatch { expected: n_vars, found: exp.len() });
            }
            p.add_term(exp, coef.into());
        }
        Ok(p)
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &ExponentVector) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, exp: ExponentVector, coef: BigInt) {
        debug_assert_eq!(exp.len(), self.n_vars);
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coef;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.n_vars);
        for (e, c) in self.terms() {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    /// Multiplies by `x^shift`.
    pub fn mul_monomial(&self, shift: &ExponentVector) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.add(shift), c.clone())).collect();
        SparsePolynomial { n_vars: self.n_vars, terms }
    }

    /// Multiplies by the variable `x_i` (1-based).
    pub fn mul_var(&self, i: usize) -> Self {
        self.mul_monomial(&ExponentVector::unit(self.n_vars, i - 1))
    }

    /// `s_i f`: exchanges `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.swap(i - 1, i);
                (e, c.clone())
            })
            .collect();
        SparsePolynomial { n_vars: self.n_vars, terms }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.degree()).max()
    }

    /// Exponent vectors with nonzero coefficient.
    pub fn support(&self) -> LatticePointSet {
        LatticePointSet::new(self.n_vars, self.terms.keys().cloned())
            .expect("terms share the variable count")
    }

    /// The terms of maximal total degree.
    pub fn top_component(&self) -> Self {
        self.homogeneous_part(self.degree())
    }

    /// The terms of minimal total degree.
    pub fn bottom_component(&self) -> Self {
        self.homogeneous_part(self.terms.keys().map(|e| e.degree()).min())
    }

    fn homogeneous_part(&self, degree: Option<u32>) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| Some(e.degree()) == degree)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        SparsePolynomial { n_vars: self.n_vars, terms }
    }
}

pub fn support(f: &SparsePolynomial) -> LatticePointSet {
    f.support()
}

pub fn top_component(f: &SparsePolynomial) -> SparsePolynomial {
    f.top_component()
}

impl fmt::Display for SparsePolynomial {
    /// Renders like `x1*x2^2 + x1^2*x2 - x1^2*x2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (exp, coef)) in self.terms.iter().enumerate() {
            let mag = coef.abs();
            match (k, coef.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, e)
                    }
                })
                .collect();
            match (vars.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", vars.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    n_vars: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: ExponentVector,
    coef: serde_json::Value,
}

/// Coefficients are JSON integers when they fit in 64 bits, decimal strings otherwise.
fn coef_to_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => v.into(),
        None => c.to_string().into(),
    }
}

fn coef_from_json(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(BigInt::from),
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

impl Serialize for SparsePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson { exp: e.clone(), coef: coef_to_json(c) })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SparsePolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let terms = raw
            .terms
            .iter()
            .map(|t| {
                coef_from_json(&t.coef)
                    .map(|c| (t.exp.clone(), c))
                    .ok_or_else(|| D::Error::custom(format!("bad coefficient {}", t.coef)))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        SparsePolynomial::from_terms(raw.n_vars, terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(n: usize, terms: &[(&[u32], i64)]) -> SparsePolynomial {
        SparsePolynomial::from_terms(n, terms.iter().map(|(e, c)| (ExponentVector(e.to_vec()), *c)))
            .unwrap()
    }

    #[test]
    fn renders_in_lex_order() {
        let g = poly(4, &[(&[2, 2, 0, 0], -1), (&[2, 1, 0, 0], 1), (&[1, 2, 0, 0], 1)]);
        assert_eq!(g.to_string(), "x1*x2^2 + x1^2*x2 - x1^2*x2^2");
        assert_eq!(SparsePolynomial::one(3).to_string(), "1");
        assert_eq!(SparsePolynomial::zero(3).to_string(), "0");
        assert_eq!(poly(2, &[(&[0, 0], -2), (&[1, 0], 3)]).to_string(), "-2 + 3*x1");
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = poly(2, &[(&[1, 0], 1), (&[0, 1], 2)]);
        let b = poly(2, &[(&[1, 0], 1)]);
        let d = a.sub(&b);
        assert_eq!(d.num_terms(), 1);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn top_and_support() {
        let g = poly(4, &[(&[1, 2, 0, 0], 1), (&[2, 1, 0, 0], 1), (&[2, 2, 0, 0], -1)]);
        assert_eq!(g.top_component(), poly(4, &[(&[2, 2, 0, 0], -1)]));
        assert_eq!(g.bottom_component().num_terms(), 2);
        assert_eq!(g.support().len(), 3);
    }

    #[test]
    fn json_shape() {
        let g = poly(2, &[(&[0, 1], -1), (&[1, 0], 1)]);
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"n_vars":2,"terms":[{"exp":[0,1],"coef":-1},{"exp":[1,0],"coef":1}]}"#);
        assert_eq!(serde_json::from_str::<SparsePolynomial>(&text).unwrap(), g);
        let huge = SparsePolynomial::monomial([1].into(), BigInt::from(u64::MAX) * 3);
        let text = serde_json::to_string(&huge).unwrap();
        assert_eq!(serde_json::from_str::<SparsePolynomial>(&text).unwrap(), huge);
    }
}
