//! Pipe dreams on the staircase `{(i, j) : i + j ≤ n}`.
//!
//! Pipes enter along the top edge (pipe `j` in column `j`) and leave along the
//! left edge. Each staircase cell holds a cross or a bump tile; cells on the
//! antidiagonal `i + j = n + 1` are fixed half-bumps turning the pipe left.
//! Cross positions are stored as one bitmask per row (bit `j - 1` for column `j`).

mod enumerate;
mod trace;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vector::WeightVector;

pub use enumerate::{count_pipe_dreams, pipe_dreams, PipeDreams};
pub use trace::{trace, TilePipes, TraceResult};

/// Largest staircase size handled by the bitmask representation.
pub const MAX_N: usize = 16;

/// A tile position `(row, column)`, 1-based.
pub type Tile = (usize, usize);

/// Total order on tiles in pipe-travel order: rows top to bottom, and right
/// to left within a row. Tile `s` is after tile `t` iff `travel_key(s) > travel_key(t)`.
pub fn travel_key((row, col): Tile) -> (usize, std::cmp::Reverse<usize>) {
    (row, std::cmp::Reverse(col))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PipeDreamJson", into = "PipeDreamJson")]
pub struct PipeDream {
    n: usize,
    rows: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PipeDreamJson {
    n: usize,
    crosses: Vec<[usize; 2]>,
}

impl TryFrom<PipeDreamJson> for PipeDream {
    type Error = Error;
    fn try_from(j: PipeDreamJson) -> Result<Self> {
        PipeDream::new(j.n, j.crosses.into_iter().map(|[r, c]| (r, c)))
    }
}

impl From<PipeDream> for PipeDreamJson {
    fn from(p: PipeDream) -> Self {
        PipeDreamJson {
            n: p.n,
            crosses: p.crosses().map(|(r, c)| [r, c]).collect(),
        }
    }
}

impl PipeDream {
    /// A pipe dream with cross tiles at the given positions and bumps elsewhere.
    pub fn new(n: usize, crosses: impl IntoIterator<Item = Tile>) -> Result<Self> {
        let mut pd = PipeDream::all_bumps(n)?;
        for (row, col) in crosses {
            if row == 0 || col == 0 || row + col > n {
                return Err(Error::CellOutOfRange {
                    row,
                    col,
                    shape: format!("staircase of size {n}"),
                });
            }
            pd.rows[row - 1] |= 1 << (col - 1);
        }
        Ok(pd)
    }

    pub fn all_bumps(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::TooLarge { n, max: MAX_N });
        }
        Ok(PipeDream { n, rows: vec![0; n] })
    }

    /// Every staircase cell a cross tile.
    pub fn all_crosses(n: usize) -> Result<Self> {
        let mut pd = PipeDream::all_bumps(n)?;
        for r in 1..=n {
            pd.rows[r - 1] = row_full_mask(n, r);
        }
        Ok(pd)
    }

    pub(crate) fn from_masks(n: usize, rows: Vec<u32>) -> Self {
        debug_assert_eq!(rows.len(), n);
        PipeDream { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row_mask(&self, row: usize) -> u32 {
        self.rows[row - 1]
    }

    pub fn is_cross(&self, (row, col): Tile) -> bool {
        self.rows[row - 1] >> (col - 1) & 1 == 1
    }

    pub(crate) fn set_tile(&mut self, (row, col): Tile, cross: bool) {
        debug_assert!(row + col <= self.n);
        if cross {
            self.rows[row - 1] |= 1 << (col - 1);
        } else {
            self.rows[row - 1] &= !(1 << (col - 1));
        }
    }

    /// Cross positions in row-major order.
    pub fn crosses(&self) -> impl Iterator<Item = Tile> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, &mask)| {
            (0..32).filter(move |b| mask >> b & 1 == 1).map(move |b| (r + 1, b + 1))
        })
    }

    pub fn cross_set(&self) -> BTreeSet<Tile> {
        self.crosses().collect()
    }

    /// Number of cross tiles, |P|.
    pub fn len(&self) -> usize {
        self.rows.iter().map(|m| m.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Cross tiles per row.
    pub fn weight(&self) -> WeightVector {
        self.rows.iter().map(|m| m.count_ones()).collect::<Vec<_>>().into()
    }

    /// The staircase cells in row-major order.
    pub fn tiles(&self) -> impl Iterator<Item = Tile> {
        let n = self.n;
        (1..=n).flat_map(move |r| (1..=n - r).map(move |c| (r, c)))
    }

    /// Replaces the fake crosses of `trace(self)` with bumps.
    pub fn drop_fakes(&self) -> PipeDream {
        let mut out = self.clone();
        for &t in &trace(self).fake_crosses {
            out.set_tile(t, false);
        }
        out
    }

    /// Text rendering: one line per row with cells, `+` for a cross and `.` for a bump.
    pub fn to_ascii(&self) -> String {
        let mut out = String::new();
        for r in 1..self.n {
            for c in 1..=self.n - r {
                out.push(if self.is_cross((r, c)) { '+' } else { '.' });
            }
            out.push('\n');
        }
        out
    }
}

pub fn drop_fakes(p: &PipeDream) -> PipeDream {
    p.drop_fakes()
}

pub(crate) fn row_full_mask(n: usize, row: usize) -> u32 {
    let cells = n - row;
    if cells == 0 {
        0
    } else {
        (1u32 << cells) - 1
    }
}

impl fmt::Display for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}
