use std::collections::BTreeSet;

use serde::Serialize;

use super::{PipeDream, Tile};
use crate::perm::Permutation;
use crate::vector::WeightVector;

/// The two pipes passing through a staircase tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TilePipes {
    /// The pipe leaving through the bottom edge.
    pub primary: usize,
    /// The pipe leaving through the left edge.
    pub secondary: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceResult {
    pub demazure: Permutation,
    pub real_crosses: BTreeSet<Tile>,
    pub fake_crosses: BTreeSet<Tile>,
    /// `tile_pipes[r - 1][c - 1]` for every staircase tile `(r, c)`.
    pub tile_pipes: Vec<Vec<TilePipes>>,
    pub reduced: bool,
    pub weight: WeightVector,
    /// Real crossing tile of each pair, indexed `[p - 1][q - 1]` symmetric.
    crossing_at: Vec<Vec<Option<Tile>>>,
}

impl TraceResult {
    pub fn pipes(&self, (row, col): Tile) -> TilePipes {
        self.tile_pipes[row - 1][col - 1]
    }

    /// Where pipes `p` and `q` really cross, if they do.
    pub fn crossing_of(&self, p: usize, q: usize) -> Option<Tile> {
        self.crossing_at[p - 1][q - 1]
    }

    /// The tile in `row` through which `pipe` leaves downward.
    pub fn primary_tile_in_row(&self, pipe: usize, row: usize) -> Option<Tile> {
        self.tile_pipes
            .get(row - 1)?
            .iter()
            .position(|tp| tp.primary == pipe)
            .map(|c| (row, c + 1))
    }

    pub fn is_real(&self, t: Tile) -> bool {
        self.real_crosses.contains(&t)
    }

    pub fn is_fake(&self, t: Tile) -> bool {
        self.fake_crosses.contains(&t)
    }
}

/// Traces the pipes of `p` with Demazure semantics: a cross tile whose two
/// pipes have already crossed acts as a bump and is recorded as fake.
pub fn trace(p: &PipeDream) -> TraceResult {
    let n = p.n();
    // vertical[c] is the pipe travelling down into the next tile of column c
    let mut vertical: Vec<usize> = (0..=n).collect();
    let mut crossing_at = vec![vec![None; n]; n];
    let mut real_crosses = BTreeSet::new();
    let mut fake_crosses = BTreeSet::new();
    let mut tile_pipes = Vec::with_capacity(n);
    let mut exits = Vec::with_capacity(n);

    for r in 1..=n {
        // half-bump on the antidiagonal
        let mut carry = vertical[n + 1 - r];
        let mut row_pipes = vec![TilePipes { primary: 0, secondary: 0 }; n - r];
        for c in (1..=n - r).rev() {
            let top = vertical[c];
            let right = carry;
            let already: bool = crossing_at[top - 1][right - 1].is_some();
            if p.is_cross((r, c)) && !already {
                debug_assert!(top < right);
                crossing_at[top - 1][right - 1] = Some((r, c));
                crossing_at[right - 1][top - 1] = Some((r, c));
                real_crosses.insert((r, c));
                row_pipes[c - 1] = TilePipes { primary: top, secondary: right };
            } else {
                if p.is_cross((r, c)) {
                    fake_crosses.insert((r, c));
                }
                vertical[c] = right;
                carry = top;
                row_pipes[c - 1] = TilePipes { primary: right, secondary: top };
            }
        }
        exits.push(carry);
        tile_pipes.push(row_pipes);
    }

    let demazure = Permutation::new(exits).expect("traced exits form a permutation");
    TraceResult {
        reduced: fake_crosses.is_empty(),
        weight: p.weight(),
        demazure,
        real_crosses,
        fake_crosses,
        tile_pipes,
        crossing_at,
    }
}
