//! Schubert and Grothendieck polynomials, by pipe-dream summation and
//! independently by divided-difference recursion from the longest element.

use num_bigint::BigInt;

use super::{divided_difference, isobaric_divided_difference, SparsePolynomial};
use crate::convex::LatticePointSet;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::pipedream::pipe_dreams;
use crate::vector::ExponentVector;

/// `Σ x^wt(P)` over reduced `P ∈ PD(w)` when `reduced_only`, otherwise
/// `Σ (-1)^(|P| - ℓ(w)) x^wt(P)` over all of PD(w).
pub fn poly_from_pipe_dreams(w: &Permutation, reduced_only: bool) -> SparsePolynomial {
    let len = w.length();
    let mut out = SparsePolynomial::zero(w.n());
    for p in pipe_dreams(w) {
        let excess = p.len() - len;
        if reduced_only && excess > 0 {
            continue;
        }
        let sign = if excess.is_multiple_of(2) { 1 } else { -1 };
        out.add_term(p.weight(), BigInt::from(sign));
    }
    out
}

/// Both polynomials from one pass over PD(w): `(𝔖_w, 𝔊_w)`.
pub fn schubert_and_grothendieck(w: &Permutation) -> (SparsePolynomial, SparsePolynomial) {
    let len = w.length();
    let mut schubert = SparsePolynomial::zero(w.n());
    let mut groth = SparsePolynomial::zero(w.n());
    for p in pipe_dreams(w) {
        let excess = p.len() - len;
        let wt = p.weight();
        if excess == 0 {
            schubert.add_term(wt.clone(), BigInt::from(1));
        }
        groth.add_term(wt, BigInt::from(if excess.is_multiple_of(2) { 1 } else { -1 }));
    }
    (schubert, groth)
}

/// `x_1^{n-1} x_2^{n-2} ⋯ x_{n-1}`.
pub fn staircase_monomial(n: usize) -> SparsePolynomial {
    let exp: Vec<u32> = (0..n).map(|k| (n - 1 - k) as u32).collect();
    SparsePolynomial::monomial(ExponentVector(exp), 1)
}

/// Which ascent to step along when climbing from `w` to `w_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AscentRule {
    Smallest,
    Largest,
}

/// A sequence `i_1, i_2, …` of ascents with `w s_{i_1} s_{i_2} ⋯ = w_0`,
/// choosing each step with `choose` from the current ascents.
pub fn descent_path(w: &Permutation, mut choose: impl FnMut(&[usize]) -> usize) -> Vec<usize> {
    let mut u = w.clone();
    let mut path = Vec::new();
    while !u.is_longest() {
        let ascents: Vec<usize> = u.ascents().collect();
        let i = choose(&ascents);
        debug_assert!(ascents.contains(&i));
        path.push(i);
        u = u.swap_adjacent(i);
    }
    path
}

fn rule_path(w: &Permutation, rule: AscentRule) -> Vec<usize> {
    descent_path(w, |a| match rule {
        AscentRule::Smallest => a[0],
        AscentRule::Largest => *a.last().unwrap(),
    })
}

fn apply_along(
    w: &Permutation,
    path: &[usize],
    op: fn(&SparsePolynomial, usize) -> Result<SparsePolynomial>,
) -> Result<SparsePolynomial> {
    // validate: every step must be an ascent and the walk must end at w_0
    let mut u = w.clone();
    for &i in path {
        if i == 0 || i >= w.n() || u.get(i) > u.get(i + 1) {
            return Err(Error::Precondition(format!("{i} is not an ascent of {u}")));
        }
        u = u.swap_adjacent(i);
    }
    if !u.is_longest() {
        return Err(Error::Precondition(format!("path ends at {u}, not the longest element")));
    }
    let mut f = staircase_monomial(w.n());
    for &i in path.iter().rev() {
        f = op(&f, i)?;
    }
    Ok(f)
}

/// 𝔖_w via `∂_{i_1} ∂_{i_2} ⋯ (x^δ)` along the given ascent path.
pub fn schubert_along(w: &Permutation, path: &[usize]) -> Result<SparsePolynomial> {
    apply_along(w, path, divided_difference)
}

/// 𝔊_w via isobaric divided differences along the given ascent path.
pub fn grothendieck_along(w: &Permutation, path: &[usize]) -> Result<SparsePolynomial> {
    apply_along(w, path, isobaric_divided_difference)
}

pub fn schubert_rec(w: &Permutation) -> SparsePolynomial {
    if w.n() == 1 {
        return SparsePolynomial::one(1);
    }
    schubert_along(w, &rule_path(w, AscentRule::Smallest)).expect("rule path is valid")
}

pub fn grothendieck_rec(w: &Permutation) -> SparsePolynomial {
    if w.n() == 1 {
        return SparsePolynomial::one(1);
    }
    grothendieck_along(w, &rule_path(w, AscentRule::Smallest)).expect("rule path is valid")
}

/// Appends the coordinate `degree - |α|` to every point.
pub fn homogenize_support(s: &LatticePointSet, degree: u32) -> Result<LatticePointSet> {
    let mut points = Vec::with_capacity(s.len());
    for p in s {
        let d = p.degree();
        if d > degree {
            return Err(Error::DegreeTooSmall { degree, needed: d, point: p.to_string() });
        }
        points.push(p.extended(degree - d));
    }
    LatticePointSet::new(s.dim() + 1, points)
}
