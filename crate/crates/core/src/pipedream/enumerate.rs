//! Pruned depth-first enumeration of PD(w).
//!
//! Rows are filled top to bottom and each row right to left, following the
//! pipes. Two facts prune the search:
//! - once two pipes really cross they stay crossed, so a real crossing is only
//!   placed for a pair that is an inversion of `w`;
//! - the pipe leaving a completed row `r` must be `w(r)`.
//!
//! The crossed pairs of a finished tiling are exactly the inversions of its
//! Demazure product, so these checks are also sufficient.
//!
//! Output order is lexicographic in the sequence of row bitmasks.

use super::{PipeDream, MAX_N};
use crate::perm::Permutation;

#[derive(Clone, Copy)]
struct State {
    row: usize,
    col: usize,
    carry: u8,
    vertical: [u8; MAX_N + 1],
    crossed: [u32; MAX_N + 1],
    masks: [u32; MAX_N],
}

/// Iterator over PD(w).
pub struct PipeDreams {
    n: usize,
    target: Vec<u8>,
    position: Vec<u8>,
    stack: Vec<State>,
}

impl PipeDreams {
    pub fn new(w: &Permutation) -> Self {
        let n = w.n();
        assert!(n <= MAX_N, "pipe dreams are limited to n <= {MAX_N}");
        let mut vertical = [0u8; MAX_N + 1];
        for (c, v) in vertical.iter_mut().enumerate().take(n + 1) {
            *v = c as u8;
        }
        let start = State {
            row: 1,
            col: n - 1,
            carry: n as u8,
            vertical,
            crossed: [0; MAX_N + 1],
            masks: [0; MAX_N],
        };
        PipeDreams {
            n,
            target: std::iter::once(0).chain(w.images().iter().map(|&v| v as u8)).collect(),
            position: std::iter::once(0)
                .chain((1..=n).map(|v| w.position_of(v) as u8))
                .collect(),
            stack: vec![start],
        }
    }

    /// Runs `s` forward through finished rows. Returns `None` if pruned,
    /// `Some(true)` if the tiling is complete, `Some(false)` if a choice is due.
    fn settle(&self, s: &mut State) -> Option<bool> {
        while s.col == 0 {
            if s.carry != self.target[s.row] {
                return None;
            }
            if s.row == self.n {
                return Some(true);
            }
            s.row += 1;
            s.carry = s.vertical[self.n + 1 - s.row];
            s.col = self.n - s.row;
        }
        Some(false)
    }
}

impl Iterator for PipeDreams {
    type Item = PipeDream;

    fn next(&mut self) -> Option<PipeDream> {
        while let Some(mut s) = self.stack.pop() {
            match self.settle(&mut s) {
                None => continue,
                Some(true) => {
                    return Some(PipeDream::from_masks(self.n, s.masks[..self.n].to_vec()));
                }
                Some(false) => {}
            }
            let c = s.col;
            let top = s.vertical[c];
            let right = s.carry;
            let bit = 1u32 << (c - 1);
            let already = s.crossed[top as usize] >> right & 1 == 1;

            // bump (or fake cross): pipes swap direction
            let mut bump = s;
            bump.vertical[c] = right;
            bump.carry = top;
            bump.col -= 1;

            if already {
                let mut fake = bump;
                fake.masks[s.row - 1] |= bit;
                self.stack.push(fake);
            } else if self.position[right as usize] < self.position[top as usize] {
                let mut cross = s;
                cross.masks[s.row - 1] |= bit;
                cross.crossed[top as usize] |= 1 << right;
                cross.crossed[right as usize] |= 1 << top;
                cross.col -= 1;
                self.stack.push(cross);
            }
            self.stack.push(bump);
        }
        None
    }
}

pub fn pipe_dreams(w: &Permutation) -> PipeDreams {
    PipeDreams::new(w)
}

pub fn count_pipe_dreams(w: &Permutation) -> usize {
    PipeDreams::new(w).count()
}
