//! Lattice points of Schubert matroid polytopes and Schubert spanning set
//! polytopes, Minkowski sumsets, and unions of componentwise intervals.

use std::collections::{BTreeSet, HashSet};

use super::LatticePointSet;
use crate::error::{Error, Result};
use crate::vector::ExponentVector;

fn check_subset(s: &BTreeSet<usize>, n: usize) -> Result<()> {
    match s.iter().find(|&&x| x == 0 || x > n) {
        Some(&bad) => Err(Error::IndexOutOfRange { index: bad, max: n }),
        None => Ok(()),
    }
}

/// Subsets of `[top]` as sorted vectors, filtered by `keep`.
fn subsets_of_prefix(top: usize, keep: impl Fn(&[usize]) -> bool) -> Vec<Vec<usize>> {
    (0u64..1 << top)
        .map(|bits| (1..=top).filter(|&x| bits >> (x - 1) & 1 == 1).collect::<Vec<_>>())
        .filter(|b| keep(b))
        .collect()
}

fn indicator(n: usize, set: &[usize]) -> ExponentVector {
    let mut v = ExponentVector::zeros(n);
    for &x in set {
        v[x - 1] = 1;
    }
    v
}

/// Indicator vectors of the bases `{b_1 < … < b_r}` with `b_i ≤ s_i`.
/// An empty `s` gives the origin alone.
pub fn schubert_matroid_bases(s: &BTreeSet<usize>, n: usize) -> Result<LatticePointSet> {
    check_subset(s, n)?;
    let bound: Vec<usize> = s.iter().copied().collect();
    let top = bound.last().copied().unwrap_or(0);
    let sets = subsets_of_prefix(top, |b| {
        b.len() == bound.len() && b.iter().zip(&bound).all(|(x, y)| x <= y)
    });
    LatticePointSet::new(n, sets.iter().map(|b| indicator(n, b)))
}

/// Indicator vectors of the spanning sets `B' ⊆ [s_r]` with `|B'| ≥ r` whose
/// first `r` elements satisfy `b_i ≤ s_i`.
pub fn schubert_spanning_sets(s: &BTreeSet<usize>, n: usize) -> Result<LatticePointSet> {
    check_subset(s, n)?;
    let bound: Vec<usize> = s.iter().copied().collect();
    let top = bound.last().copied().unwrap_or(0);
    let sets = subsets_of_prefix(top, |b| {
        b.len() >= bound.len() && b.iter().zip(&bound).all(|(x, y)| x <= y)
    });
    LatticePointSet::new(n, sets.iter().map(|b| indicator(n, b)))
}

/// `{a_1 + … + a_k : a_j ∈ sets[j]}`.
pub fn minkowski_sumset(sets: &[LatticePointSet]) -> Result<LatticePointSet> {
    let first = sets
        .first()
        .ok_or_else(|| Error::Precondition("sumset of an empty list".into()))?;
    let dim = first.dim();
    let mut acc: HashSet<ExponentVector> = first.iter().cloned().collect();
    for s in &sets[1..] {
        if s.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: s.dim() });
        }
        let mut next = HashSet::with_capacity(acc.len() * s.len().max(1));
        for a in &acc {
            for b in s {
                next.insert(a.add(b));
            }
        }
        acc = next;
    }
    LatticePointSet::new(dim, acc)
}

/// `⋃_{α ∈ lows} {γ : α ≤ γ ≤ high}`.
pub fn interval_union(lows: &LatticePointSet, high: &ExponentVector) -> Result<LatticePointSet> {
    if lows.dim() != high.len() {
        return Err(Error::DimensionMismatch { expected: lows.dim(), found: high.len() });
    }
    let mut out: HashSet<ExponentVector> = HashSet::new();
    for low in lows {
        if let Some(coord) = (0..high.len()).find(|&k| low[k] > high[k]) {
            return Err(Error::IntervalBound { low: low.to_string(), coord: coord + 1 });
        }
        // odometer over the box [low, high]
        let mut g = low.clone();
        loop {
            out.insert(g.clone());
            let mut k = 0;
            while k < g.len() && g[k] == high[k] {
                g[k] = low[k];
                k += 1;
            }
            if k == g.len() {
                break;
            }
            g[k] += 1;
        }
    }
    LatticePointSet::new(lows.dim(), out)
}

/// The fundamental weight `ω_k = (1, …, 1, 0, …, 0)` with `k` ones.
pub fn fundamental_weight(k: usize, n: usize) -> ExponentVector {
    (0..n).map(|i| u32::from(i < k)).collect::<Vec<_>>().into()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    fn pts(dim: usize, xs: &[&[u32]]) -> LatticePointSet {
        LatticePointSet::new(dim, xs.iter().map(|x| ExponentVector(x.to_vec()))).unwrap()
    }

    #[test]
    fn bases_examples() {
        assert_eq!(schubert_matroid_bases(&set(&[1, 3]), 3).unwrap(), pts(3, &[&[1, 1, 0], &[1, 0, 1]]));
        assert_eq!(
            schubert_matroid_bases(&set(&[3]), 4).unwrap(),
            pts(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]])
        );
        assert_eq!(schubert_matroid_bases(&set(&[1, 2, 3]), 4).unwrap(), pts(4, &[&[1, 1, 1, 0]]));
        assert_eq!(schubert_matroid_bases(&set(&[]), 3).unwrap(), LatticePointSet::origin(3));
        assert!(schubert_matroid_bases(&set(&[4]), 3).is_err());
    }

    #[test]
    fn spanning_examples() {
        assert_eq!(
            schubert_spanning_sets(&set(&[1, 3]), 3).unwrap(),
            pts(3, &[&[1, 1, 0], &[1, 0, 1], &[1, 1, 1]])
        );
        assert_eq!(schubert_spanning_sets(&set(&[1]), 3).unwrap(), pts(3, &[&[1, 0, 0]]));
        assert_eq!(schubert_spanning_sets(&set(&[]), 2).unwrap(), LatticePointSet::origin(2));
    }

    #[test]
    fn spanning_sets_are_intervals_over_bases() {
        let n = 6;
        for bits in 1u32..1 << n {
            let s: BTreeSet<usize> = (1..=n).filter(|&x| bits >> (x - 1) & 1 == 1).collect();
            let top = *s.last().unwrap();
            let bases = schubert_matroid_bases(&s, n).unwrap();
            let via_intervals = interval_union(&bases, &fundamental_weight(top, n)).unwrap();
            assert_eq!(schubert_spanning_sets(&s, n).unwrap(), via_intervals, "{s:?}");
        }
    }

    #[test]
    fn sumset_examples() {
        let a = pts(2, &[&[1, 0]]);
        let b = pts(2, &[&[2, 3]]);
        assert_eq!(minkowski_sumset(&[a, b]).unwrap(), pts(2, &[&[3, 3]]));
        let e = pts(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(
            minkowski_sumset(&[e.clone(), e]).unwrap(),
            pts(2, &[&[2, 0], &[1, 1], &[0, 2]])
        );
        assert!(minkowski_sumset(&[pts(2, &[&[0, 0]]), pts(3, &[&[0, 0, 0]])]).is_err());
        assert!(minkowski_sumset(&[]).is_err());
    }

    #[test]
    fn interval_examples() {
        let high = ExponentVector::from([2, 2, 0]);
        assert_eq!(interval_union(&pts(3, &[&[2, 2, 0]]), &high).unwrap(), pts(3, &[&[2, 2, 0]]));
        assert_eq!(
            interval_union(&pts(3, &[&[1, 2, 0], &[2, 1, 0]]), &high).unwrap(),
            pts(3, &[&[1, 2, 0], &[2, 1, 0], &[2, 2, 0]])
        );
        assert_eq!(
            interval_union(&pts(2, &[&[0, 0]]), &[1, 1].into()).unwrap(),
            pts(2, &[&[0, 0], &[0, 1], &[1, 0], &[1, 1]])
        );
        let err = interval_union(&pts(2, &[&[0, 3]]), &[1, 1].into()).unwrap_err();
        assert_eq!(err, Error::IntervalBound { low: "(0,3)".into(), coord: 2 });
    }

    #[test]
    fn interval_union_matches_bounding_box_count() {
        use rand::{RngExt, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let dim = rng.random_range(1..=4);
            let high: ExponentVector = (0..dim).map(|_| rng.random_range(0..=3)).collect::<Vec<_>>().into();
            let lows: Vec<ExponentVector> = (0..rng.random_range(1..=4))
                .map(|_| high.iter().map(|&h| rng.random_range(0..=h)).collect::<Vec<_>>().into())
                .collect();
            let lows = LatticePointSet::new(dim, lows).unwrap();
            let got = interval_union(&lows, &high).unwrap();
            // brute count over the box [0, high]
            let mut count = 0;
            let mut g = ExponentVector::zeros(dim);
            loop {
                if lows.iter().any(|l| l.le(&g)) {
                    count += 1;
                    assert!(got.contains(&g));
                }
                let mut k = 0;
                while k < dim && g[k] == high[k] {
                    g[k] = 0;
                    k += 1;
                }
                if k == dim {
                    break;
                }
                g[k] += 1;
            }
            assert_eq!(got.len(), count);
        }
    }
}
