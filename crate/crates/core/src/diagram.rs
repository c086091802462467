//! Diagrams: finite sets of cells in an `n_rows × n_cols` grid.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::vector::WeightVector;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DiagramJson", into = "DiagramJson")]
pub struct Diagram {
    n_rows: usize,
    n_cols: usize,
    cells: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    n_rows: usize,
    n_cols: usize,
    cells: Vec<[usize; 2]>,
}

impl TryFrom<DiagramJson> for Diagram {
    type Error = Error;
    fn try_from(j: DiagramJson) -> Result<Self> {
        Diagram::new(j.n_rows, j.n_cols, j.cells.into_iter().map(|[r, c]| (r, c)))
    }
}

impl From<Diagram> for DiagramJson {
    fn from(d: Diagram) -> Self {
        DiagramJson {
            n_rows: d.n_rows,
            n_cols: d.n_cols,
            cells: d.cells.iter().map(|&(r, c)| [r, c]).collect(),
        }
    }
}

impl Diagram {
    pub fn new(
        n_rows: usize,
        n_cols: usize,
        cells: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let cells: BTreeSet<_> = cells.into_iter().collect();
        if let Some(&(row, col)) = cells
            .iter()
            .find(|&&(r, c)| r == 0 || c == 0 || r > n_rows || c > n_cols)
        {
            return Err(Error::CellOutOfRange {
                row,
                col,
                shape: format!("{n_rows}x{n_cols} grid"),
            });
        }
        Ok(Diagram { n_rows, n_cols, cells })
    }

    pub fn empty(n_rows: usize, n_cols: usize) -> Self {
        Diagram { n_rows, n_cols, cells: BTreeSet::new() }
    }

    /// Builds a diagram from its columns `D_1, …, D_m`, each a set of rows.
    pub fn from_columns(n_rows: usize, columns: &[BTreeSet<usize>]) -> Result<Self> {
        let cells = columns
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |&i| (i, j + 1)));
        Diagram::new(n_rows, columns.len(), cells)
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn cells(&self) -> &BTreeSet<(usize, usize)> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.cells.contains(&(row, col))
    }

    /// Rows occupied in column `col` (1-based).
    pub fn column(&self, col: usize) -> BTreeSet<usize> {
        self.cells
            .iter()
            .filter(|&&(_, c)| c == col)
            .map(|&(r, _)| r)
            .collect()
    }

    pub fn columns(&self) -> Vec<BTreeSet<usize>> {
        let mut cols = vec![BTreeSet::new(); self.n_cols];
        for &(r, c) in &self.cells {
            cols[c - 1].insert(r);
        }
        cols
    }

    /// Cells lying weakly above some cell of the same column.
    pub fn upward_closure(&self) -> Diagram {
        let cells = self
            .columns()
            .into_iter()
            .enumerate()
            .flat_map(|(j, col)| {
                let top = col.last().copied().unwrap_or(0);
                (1..=top).map(move |i| (i, j + 1))
            })
            .collect();
        Diagram { n_rows: self.n_rows, n_cols: self.n_cols, cells }
    }

    /// Number of cells in each row.
    pub fn row_weight(&self) -> WeightVector {
        let mut wt = WeightVector::zeros(self.n_rows);
        for &(r, _) in &self.cells {
            wt[r - 1] += 1;
        }
        wt
    }
}

/// D(w) = {(i, j) : i < w⁻¹(j) and j < w(i)}.
pub fn rothe_diagram(w: &Permutation) -> Diagram {
    let n = w.n();
    let cells = (1..=n)
        .flat_map(|i| (1..w.get(i)).map(move |j| (i, j)))
        .filter(|&(i, j)| i < w.position_of(j))
        .collect();
    Diagram { n_rows: n, n_cols: n, cells }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn rothe_examples() {
        assert!(rothe_diagram(&Permutation::identity(4)).is_empty());
        let d = rothe_diagram(&p("31542"));
        let want: BTreeSet<_> = [(1, 1), (1, 2), (3, 2), (3, 4), (4, 2)].into_iter().collect();
        assert_eq!(d.cells(), &want);
        assert_eq!(d.len(), p("31542").length());
        for n in 1..=6 {
            let d = rothe_diagram(&Permutation::longest(n));
            let stair: BTreeSet<_> = (1..=n)
                .flat_map(|i| (1..=n).map(move |j| (i, j)))
                .filter(|&(i, j)| i + j <= n)
                .collect();
            assert_eq!(d.cells(), &stair);
        }
    }

    #[test]
    fn closure_examples() {
        let closed = rothe_diagram(&p("31542")).upward_closure();
        assert_eq!(closed.column(1), [1].into_iter().collect());
        assert_eq!(closed.column(2), (1..=4).collect());
        assert_eq!(closed.column(3), BTreeSet::new());
        assert_eq!(closed.column(4), (1..=3).collect());
        assert_eq!(closed.upward_closure(), closed);
        assert!(Diagram::empty(3, 3).upward_closure().is_empty());
    }

    #[test]
    fn row_weights() {
        let closed = rothe_diagram(&p("31542")).upward_closure();
        assert_eq!(closed.row_weight(), [3, 2, 2, 1, 0].into());
        assert_eq!(Diagram::empty(3, 2).row_weight(), [0, 0, 0].into());
        assert_eq!(rothe_diagram(&Permutation::longest(4)).row_weight(), [3, 2, 1, 0].into());
    }

    #[test]
    fn json_is_sorted_and_validated() {
        let d = Diagram::new(3, 2, [(2, 1), (1, 2), (1, 1)]).unwrap();
        let text = serde_json::to_string(&d).unwrap();
        assert_eq!(text, r#"{"n_rows":3,"n_cols":2,"cells":[[1,1],[1,2],[2,1]]}"#);
        assert_eq!(serde_json::from_str::<Diagram>(&text).unwrap(), d);
        assert!(serde_json::from_str::<Diagram>(r#"{"n_rows":2,"n_cols":2,"cells":[[3,1]]}"#).is_err());
    }
}
