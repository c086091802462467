use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vector::ExponentVector;

/// A finite set of nonnegative integer vectors of a common dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticePointSet {
    dim: usize,
    points: BTreeSet<ExponentVector>,
}

impl LatticePointSet {
    pub fn new(dim: usize, points: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        let points: BTreeSet<_> = points.into_iter().collect();
        if let Some(bad) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: bad.len() });
        }
        Ok(LatticePointSet { dim, points })
    }

    pub fn empty(dim: usize) -> Self {
        LatticePointSet { dim, points: BTreeSet::new() }
    }

    /// The set containing only the origin.
    pub fn origin(dim: usize) -> Self {
        LatticePointSet { dim, points: [ExponentVector::zeros(dim)].into_iter().collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &ExponentVector) -> bool {
        self.points.contains(p)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &ExponentVector> {
        self.points.iter()
    }

    pub fn points(&self) -> &BTreeSet<ExponentVector> {
        &self.points
    }

    pub fn insert(&mut self, p: ExponentVector) -> Result<bool> {
        if p.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: p.len() });
        }
        Ok(self.points.insert(p))
    }

    pub fn is_subset(&self, other: &LatticePointSet) -> bool {
        self.points.is_subset(&other.points)
    }

    /// Points of `self` missing from `other`, in order.
    pub fn difference(&self, other: &LatticePointSet) -> Vec<ExponentVector> {
        self.points.difference(&other.points).cloned().collect()
    }

    pub fn union(&self, other: &LatticePointSet) -> Result<LatticePointSet> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(LatticePointSet {
            dim: self.dim,
            points: self.points.union(&other.points).cloned().collect(),
        })
    }
}

impl<'a> IntoIterator for &'a LatticePointSet {
    type Item = &'a ExponentVector;
    type IntoIter = std::collections::btree_set::Iter<'a, ExponentVector>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}
