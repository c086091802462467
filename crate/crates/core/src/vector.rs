use std::fmt;
use std::ops::{Deref, DerefMut};

use serde::{Deserialize, Serialize};

/// A vector of nonnegative integers: a monomial exponent, a pipe dream weight,
/// or a lattice point of one of the polytopes in [`crate::convex`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<u32>);

/// Per-row counts (of cross tiles, or of diagram cells).
pub type WeightVector = ExponentVector;

impl ExponentVector {
    pub fn zeros(len: usize) -> Self {
        ExponentVector(vec![0; len])
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[i] = 1;
        v
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Componentwise `self <= other`. Vectors of different length are incomparable.
    pub fn le(&self, other: &Self) -> bool {
        self.len() == other.len() && self.iter().zip(other.iter()).all(|(a, b)| a <= b)
    }

    /// Adds two vectors of equal length.
    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.iter().zip(other.iter()).map(|(a, b)| a + b).collect())
    }

    /// Appends one coordinate.
    pub fn extended(&self, last: u32) -> Self {
        let mut v = self.0.clone();
        v.push(last);
        ExponentVector(v)
    }
}

impl Deref for ExponentVector {
    type Target = Vec<u32>;
    fn deref(&self) -> &Vec<u32> {
        &self.0
    }
}

impl DerefMut for ExponentVector {
    fn deref_mut(&mut self) -> &mut Vec<u32> {
        &mut self.0
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        if self.len() == 1 {
            write!(f, ",")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_matches_tuple_notation() {
        assert_eq!(ExponentVector::from([3, 2, 0]).to_string(), "(3,2,0)");
        assert_eq!(ExponentVector::from([0]).to_string(), "(0,)");
    }

    #[test]
    fn componentwise_order() {
        let a = ExponentVector::from([1, 2, 0]);
        let b = ExponentVector::from([2, 2, 0]);
        assert!(a.le(&b));
        assert!(!b.le(&a));
        assert!(!a.le(&ExponentVector::from([1, 2])));
    }
}
