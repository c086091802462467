use super::SparsePolynomial;
use crate::error::{Error, Result};

fn check_index(f: &SparsePolynomial, i: usize) -> Result<()> {
    if i == 0 || i >= f.n_vars() {
        return Err(Error::IndexOutOfRange { index: i, max: f.n_vars().saturating_sub(1) });
    }
    Ok(())
}

/// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`, computed monomial by monomial:
/// for `a > b`, `(x_i^a x_{i+1}^b - x_i^b x_{i+1}^a) / (x_i - x_{i+1})`
/// is `Σ_{k=0}^{a-b-1} x_i^{a-1-k} x_{i+1}^{b+k}`, and the case `a < b` is its negative.
pub fn divided_difference(f: &SparsePolynomial, i: usize) -> Result<SparsePolynomial> {
    check_index(f, i)?;
    let (p, q) = (i - 1, i);
    let mut out = SparsePolynomial::zero(f.n_vars());
    for (exp, coef) in f.terms() {
        let (a, b) = (exp[p], exp[q]);
        if a == b {
            continue;
        }
        let (hi, lo, sign) = if a > b { (a, b, coef.clone()) } else { (b, a, -coef.clone()) };
        for k in 0..hi - lo {
            let mut e = exp.clone();
            e[p] = hi - 1 - k;
            e[q] = lo + k;
            out.add_term(e, sign.clone());
        }
    }
    Ok(out)
}

/// `∂̄_i f = ∂_i((1 - x_{i+1}) f)`.
pub fn isobaric_divided_difference(f: &SparsePolynomial, i: usize) -> Result<SparsePolynomial> {
    check_index(f, i)?;
    let shifted = f.sub(&f.mul_var(i + 1));
    divided_difference(&shifted, i)
}
