//! Permutations in one-line notation, the fireworks and layered classes,
//! descending runs, and the maximal weight vector of a fireworks permutation.
//!
//! Indices and values are 1-based throughout: `w.get(i)` is w(i).

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::vector::WeightVector;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
    inverse: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation `w(1) … w(n)`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let render = || {
            images
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        if n == 0 {
            return Err(Error::MalformedPermutation {
                input: String::new(),
                reason: "empty permutation".into(),
            });
        }
        let mut inverse = vec![0; n];
        for (pos, &v) in images.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::MalformedPermutation {
                    input: render(),
                    reason: format!("value {v} is outside 1..={n}"),
                });
            }
            if inverse[v - 1] != 0 {
                return Err(Error::MalformedPermutation {
                    input: render(),
                    reason: format!("value {v} appears more than once"),
                });
            }
            inverse[v - 1] = pos + 1;
        }
        Ok(Permutation { images, inverse })
    }

    pub fn identity(n: usize) -> Self {
        Self::new((1..=n).collect()).expect("identity is a bijection")
    }

    /// The longest element `n (n-1) … 1`.
    pub fn longest(n: usize) -> Self {
        Self::new((1..=n).rev().collect()).expect("w0 is a bijection")
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// w(i) for 1 ≤ i ≤ n.
    pub fn get(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// w⁻¹(v) for 1 ≤ v ≤ n.
    pub fn position_of(&self, v: usize) -> usize {
        self.inverse[v - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        Permutation {
            images: self.inverse.clone(),
            inverse: self.images.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    pub fn is_longest(&self) -> bool {
        let n = self.n();
        self.images.iter().enumerate().all(|(k, &v)| v == n - k)
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// `w s_i`: swaps the entries in positions i and i+1.
    pub fn swap_adjacent(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Self::new(images).expect("swapping positions keeps a bijection")
    }

    /// Positions i with w(i) < w(i+1), i.e. ℓ(w s_i) > ℓ(w).
    pub fn ascents(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.n()).filter(move |&i| self.get(i) < self.get(i + 1))
    }

    /// Whether w(i) exceeds every earlier value.
    pub fn is_left_to_right_max(&self, i: usize) -> bool {
        (1..i).all(|k| self.get(k) < self.get(i))
    }

    /// Maximal intervals of positions on which w is decreasing, in order.
    pub fn descending_runs(&self) -> Vec<RangeInclusive<usize>> {
        let n = self.n();
        let mut runs = Vec::new();
        let mut start = 1;
        for i in 1..n {
            if self.get(i) < self.get(i + 1) {
                runs.push(start..=i);
                start = i + 1;
            }
        }
        runs.push(start..=n);
        runs
    }

    /// Whether w(i) is the first entry of its descending run.
    pub fn is_run_initial(&self, i: usize) -> bool {
        i == 1 || self.get(i - 1) < self.get(i)
    }

    /// Fireworks test via the initial terms of descending runs being increasing.
    pub fn is_fireworks(&self) -> bool {
        let by_runs = self.is_fireworks_by_runs();
        debug_assert_eq!(by_runs, self.is_fireworks_by_pattern(), "{self}");
        by_runs
    }

    pub fn is_fireworks_by_runs(&self) -> bool {
        let initials: Vec<usize> = self
            .descending_runs()
            .iter()
            .map(|r| self.get(*r.start()))
            .collect();
        initials.windows(2).all(|p| p[0] < p[1])
    }

    /// Fireworks test via 3-12 avoidance: no i < j with w(j) < w(j+1) < w(i).
    pub fn is_fireworks_by_pattern(&self) -> bool {
        let n = self.n();
        for j in 1..n {
            if self.get(j) < self.get(j + 1) && (1..j).any(|i| self.get(i) > self.get(j + 1)) {
                return false;
            }
        }
        true
    }

    /// Layered test via 231- and 312-avoidance.
    pub fn is_layered(&self) -> bool {
        let by_pattern = self.is_layered_by_pattern();
        debug_assert_eq!(by_pattern, self.is_layered_by_blocks(), "{self}");
        by_pattern
    }

    pub fn is_layered_by_pattern(&self) -> bool {
        !self.contains_pattern(&[2, 3, 1]) && !self.contains_pattern(&[3, 1, 2])
    }

    /// Layered test via comparison with the layered permutation built from
    /// the run lengths.
    pub fn is_layered_by_blocks(&self) -> bool {
        let blocks: Vec<usize> = self.descending_runs().iter().map(|r| r.clone().count()).collect();
        layered_from_blocks(&blocks).map(|u| &u == self).unwrap_or(false)
    }

    /// Classical containment of a length-3 pattern.
    fn contains_pattern(&self, pattern: &[usize; 3]) -> bool {
        let n = self.n();
        let w = &self.images;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let vals = [w[a], w[b], w[c]];
                    let matches = (0..3).all(|x| {
                        (0..3).all(|y| (vals[x] < vals[y]) == (pattern[x] < pattern[y]))
                    });
                    if matches {
                        return true;
                    }
                }
            }
        }
        false
    }

    fn require_fireworks(&self) -> Result<()> {
        if self.is_fireworks() {
            Ok(())
        } else {
            Err(Error::NotFireworks {
                perm: self.to_string(),
            })
        }
    }

    /// All of S_n in lexicographic order of one-line notation.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some((1..=n).collect()),
        }
    }
}

/// Lexicographic iterator over S_n.
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let n = succ.len();
        if n >= 2 {
            if let Some(i) = (0..n - 1).rev().find(|&i| succ[i] < succ[i + 1]) {
                let j = (i + 1..n).rev().find(|&j| succ[j] > succ[i]).unwrap();
                succ.swap(i, j);
                succ[i + 1..].reverse();
                self.next = Some(succ);
            }
        }
        Some(Permutation::new(cur).expect("lexicographic successor is a bijection"))
    }
}

/// The layered permutation with the given block sizes, i.e. the longest
/// element of the Young subgroup `S_{b1} × … × S_{bm}`.
pub fn layered_from_blocks(blocks: &[usize]) -> Result<Permutation> {
    if blocks.is_empty() || blocks.contains(&0) {
        return Err(Error::InvalidBlocks(blocks.to_vec()));
    }
    let mut images = Vec::with_capacity(blocks.iter().sum());
    let mut top = 0;
    for &b in blocks {
        let base = top;
        top += b;
        images.extend((base + 1..=top).rev());
    }
    Permutation::new(images)
}

/// π(w): the layered permutation whose blocks are the descending run lengths of w.
pub fn pi_of(w: &Permutation) -> Result<Permutation> {
    w.require_fireworks()?;
    let blocks: Vec<usize> = w.descending_runs().iter().map(|r| r.clone().count()).collect();
    layered_from_blocks(&blocks)
}

/// Entry a counts positions j > a whose value is not the initial term of a
/// descending run. Equals the row weight of the upward closure of D(w).
pub fn max_weight_formula(w: &Permutation) -> Result<WeightVector> {
    w.require_fireworks()?;
    let n = w.n();
    let non_initial: Vec<usize> = (1..=n).filter(|&j| !w.is_run_initial(j)).collect();
    Ok((1..=n)
        .map(|a| non_initial.iter().filter(|&&j| j > a).count() as u32)
        .collect::<Vec<_>>()
        .into())
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts a digit string such as `2413` (n ≤ 9) or comma-separated
    /// values such as `2,4,1,3`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = |reason: String| Error::MalformedPermutation {
            input: text.to_string(),
            reason,
        };
        let images: Vec<usize> = if text.contains(',') {
            text.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<usize>()
                        .map_err(|_| bad(format!("{:?} is not a positive integer", tok.trim())))
                })
                .collect::<Result<_>>()?
        } else {
            if text.is_empty() {
                return Err(bad("empty input".into()));
            }
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| bad(format!("{c:?} is not a digit")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(images).map_err(|e| match e {
            Error::MalformedPermutation { reason, .. } => bad(reason),
            other => other,
        })
    }
}

pub fn parse_permutation(text: &str) -> Result<Permutation> {
    text.parse()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.images {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
