use serde::Serialize;

use super::LatticePointSet;
use crate::vector::ExponentVector;

/// A failure of the exchange axiom: no `j` with `α_j < β_j`,
/// `α - e_i + e_j ∈ S` and `β + e_i - e_j ∈ S`. `i` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeWitness {
    pub alpha: ExponentVector,
    pub beta: ExponentVector,
    pub i: usize,
}

/// Searches for a violation of the M-convex exchange axiom.
pub fn m_convex_violation(s: &LatticePointSet) -> Option<ExchangeWitness> {
    let n = s.dim();
    for alpha in s.iter().rev() {
        for beta in s.iter() {
            for i in 0..n {
                if alpha[i] <= beta[i] {
                    continue;
                }
                let exchanged = (0..n).filter(|&j| alpha[j] < beta[j]).any(|j| {
                    let mut a = alpha.clone();
                    a[i] -= 1;
                    a[j] += 1;
                    let mut b = beta.clone();
                    b[i] += 1;
                    b[j] -= 1;
                    s.contains(&a) && s.contains(&b)
                });
                if !exchanged {
                    return Some(ExchangeWitness { alpha: alpha.clone(), beta: beta.clone(), i: i + 1 });
                }
            }
        }
    }
    None
}

pub fn is_m_convex(s: &LatticePointSet) -> bool {
    m_convex_violation(s).is_none()
}
