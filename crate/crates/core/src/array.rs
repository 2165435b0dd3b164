use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::params::ArrayParams;
use crate::residue::Residue;
use crate::{Error, Result};

/// A 1-based `(row, column)` coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The `i`-th diagonal `{(i,1), (i+1,2), ..., (i-1,n)}` of an `n x n` array,
/// with indices reduced into `1..=n`.
pub fn diagonal(n: usize, i: usize) -> Vec<Cell> {
    assert!(n >= 1 && (1..=n).contains(&i));
    (0..n)
        .map(|c| Cell::new((i - 1 + c) % n + 1, c + 1))
        .collect()
}

/// A partially filled `m x n` array over `Z_v`.
///
/// Construction enforces the shape (`h` filled cells per row, `k` per
/// column) and that no entry is zero or lies in the subgroup `J`.
#[derive(Clone, PartialEq, Eq)]
pub struct PFArray {
    params: ArrayParams,
    cells: Vec<Option<Residue>>,
}

impl PFArray {
    /// Builds an array from rows of signed integers (`None` = empty cell).
    pub fn from_rows(params: ArrayParams, rows: &[Vec<Option<i64>>]) -> Result<Self> {
        if rows.len() != params.m {
            return Err(Error::Shape(format!(
                "expected {} rows, got {}",
                params.m,
                rows.len()
            )));
        }
        let mut cells = Vec::with_capacity(params.m * params.n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != params.n {
                return Err(Error::Shape(format!(
                    "row {} has {} cells, expected {}",
                    i + 1,
                    row.len(),
                    params.n
                )));
            }
            cells.extend(row.iter().map(|x| x.map(|x| params.residue(x))));
        }
        PFArray::from_cells(params, cells)
    }

    /// Builds an array from a row-major vector of residues.
    pub fn from_cells(params: ArrayParams, cells: Vec<Option<Residue>>) -> Result<Self> {
        if cells.len() != params.m * params.n {
            return Err(Error::Shape(format!(
                "expected {} cells, got {}",
                params.m * params.n,
                cells.len()
            )));
        }
        let array = PFArray { params, cells };
        for (idx, x) in array.cells.iter().enumerate() {
            if let Some(x) = x {
                if x.modulus() != params.v {
                    return Err(Error::InvalidInput(format!(
                        "entry {x:?} is not in Z_{}",
                        params.v
                    )));
                }
                if params.in_subgroup(*x) {
                    let cell = Cell::new(idx / params.n + 1, idx % params.n + 1);
                    return Err(Error::InvalidInput(format!(
                        "cell {cell} holds {x}, which lies in the subgroup of order {}",
                        params.t
                    )));
                }
            }
        }
        for i in 1..=params.m {
            let c = array.row(i).len();
            if c != params.h {
                return Err(Error::Shape(format!(
                    "row {i} has {c} filled cells, expected {}",
                    params.h
                )));
            }
        }
        for j in 1..=params.n {
            let c = array.column(j).len();
            if c != params.k {
                return Err(Error::Shape(format!(
                    "column {j} has {c} filled cells, expected {}",
                    params.k
                )));
            }
        }
        Ok(array)
    }

    /// Builds an array by placing entries on the given cells.
    pub fn from_entries<I>(params: ArrayParams, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Cell, Residue)>,
    {
        let mut cells = vec![None; params.m * params.n];
        for (cell, x) in entries {
            if cell.row == 0 || cell.row > params.m || cell.col == 0 || cell.col > params.n {
                return Err(Error::Shape(format!("cell {cell} is outside the array")));
            }
            let slot = &mut cells[(cell.row - 1) * params.n + cell.col - 1];
            if slot.is_some() {
                return Err(Error::Shape(format!("cell {cell} filled twice")));
            }
            *slot = Some(x);
        }
        PFArray::from_cells(params, cells)
    }

    pub fn params(&self) -> &ArrayParams {
        &self.params
    }

    pub fn modulus(&self) -> u64 {
        self.params.v
    }

    pub fn get(&self, row: usize, col: usize) -> Option<Residue> {
        assert!(row >= 1 && row <= self.params.m && col >= 1 && col <= self.params.n);
        self.cells[(row - 1) * self.params.n + col - 1]
    }

    pub fn get_cell(&self, cell: Cell) -> Option<Residue> {
        self.get(cell.row, cell.col)
    }

    /// Filled cells of row `i`, left to right.
    pub fn row(&self, i: usize) -> Vec<(Cell, Residue)> {
        (1..=self.params.n)
            .filter_map(|j| self.get(i, j).map(|x| (Cell::new(i, j), x)))
            .collect()
    }

    /// Filled cells of column `j`, top to bottom.
    pub fn column(&self, j: usize) -> Vec<(Cell, Residue)> {
        (1..=self.params.m)
            .filter_map(|i| self.get(i, j).map(|x| (Cell::new(i, j), x)))
            .collect()
    }

    pub fn row_entries(&self, i: usize) -> Vec<Residue> {
        self.row(i).into_iter().map(|(_, x)| x).collect()
    }

    pub fn column_entries(&self, j: usize) -> Vec<Residue> {
        self.column(j).into_iter().map(|(_, x)| x).collect()
    }

    /// All filled cells in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, Residue)> + '_ {
        let n = self.params.n;
        self.cells
            .iter()
            .enumerate()
            .filter_map(move |(idx, x)| x.map(|x| (Cell::new(idx / n + 1, idx % n + 1), x)))
    }

    pub fn filled_cells(&self) -> Vec<Cell> {
        self.entries().map(|(c, _)| c).collect()
    }

    pub fn row_sum(&self, i: usize) -> Residue {
        self.row(i)
            .into_iter()
            .fold(Residue::zero(self.params.v), |acc, (_, x)| acc + x)
    }

    pub fn column_sum(&self, j: usize) -> Residue {
        self.column(j)
            .into_iter()
            .fold(Residue::zero(self.params.v), |acc, (_, x)| acc + x)
    }

    /// Where each entry sits. Entries are only unique when the array
    /// satisfies the covering condition, so duplicates map to the last cell.
    pub fn positions(&self) -> HashMap<Residue, Cell> {
        self.entries().map(|(c, x)| (x, c)).collect()
    }

    /// Returns a copy with `cell` replaced by `value`; the cell must be filled.
    fn index(&self, cell: Cell) -> Result<usize> {
        if cell.row == 0 || cell.row > self.params.m || cell.col == 0 || cell.col > self.params.n {
            return Err(Error::Shape(format!("cell {cell} is outside the array")));
        }
        Ok((cell.row - 1) * self.params.n + cell.col - 1)
    }

    pub fn with_value(&self, cell: Cell, value: i64) -> Result<PFArray> {
        if self.cells[self.index(cell)?].is_none() {
            return Err(Error::Shape(format!("cell {cell} is empty")));
        }
        let mut cells = self.cells.clone();
        cells[self.index(cell)?] = Some(self.params.residue(value));
        PFArray::from_cells(self.params, cells)
    }

    /// Returns a copy with the entries in `cells` negated.
    pub fn with_negated(&self, cells: &[Cell]) -> Result<PFArray> {
        let mut out = self.cells.clone();
        for cell in cells {
            let slot = &mut out[self.index(*cell)?];
            match slot {
                Some(x) => *x = -*x,
                None => return Err(Error::Shape(format!("cell {cell} is empty"))),
            }
        }
        PFArray::from_cells(self.params, out)
    }

    /// Whether the filled cells are exactly `k` cyclically consecutive diagonals.
    pub fn is_cyclically_k_diagonal(&self) -> bool {
        let p = &self.params;
        if !p.is_square() {
            return false;
        }
        let n = p.n;
        let full: Vec<bool> = (1..=n)
            .map(|i| diagonal(n, i).iter().all(|c| self.get_cell(*c).is_some()))
            .collect();
        let empty: Vec<bool> = (1..=n)
            .map(|i| diagonal(n, i).iter().all(|c| self.get_cell(*c).is_none()))
            .collect();
        if (0..n).any(|i| !full[i] && !empty[i]) {
            return false;
        }
        if p.k == n {
            return true;
        }
        // some start s with D_s..D_{s+k-1} full and the rest empty
        (0..n).any(|s| (0..n).all(|d| full[(s + d) % n] == (d < p.k)))
    }
}

impl fmt::Debug for PFArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PFArray({}) ", self.params)?;
        f.debug_list()
            .entries((1..=self.params.m).map(|i| {
                (1..=self.params.n)
                    .map(|j| self.get(i, j).map(|x| x.signed()))
                    .collect::<Vec<_>>()
            }))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nh34() -> PFArray {
        let p = ArrayParams::new(3, 4, 4, 3, 1).unwrap();
        let rows = vec![
            vec![Some(1), Some(10), Some(-11), Some(2)],
            vec![Some(8), Some(6), Some(-3), Some(5)],
            vec![Some(-7), Some(12), Some(9), Some(4)],
        ];
        PFArray::from_rows(p, &rows).unwrap()
    }

    #[test]
    fn lines_and_sums() {
        let a = nh34();
        assert_eq!(a.get(1, 3).unwrap().signed(), -11);
        let rows: Vec<u64> = (1..=3).map(|i| a.row_sum(i).value()).collect();
        assert_eq!(rows, vec![2, 16, 18]);
        let cols: Vec<u64> = (1..=4).map(|j| a.column_sum(j).value()).collect();
        assert_eq!(cols, vec![2, 3, 20, 11]);
        assert_eq!(
            a.column_entries(2)
                .iter()
                .map(|x| x.signed())
                .collect::<Vec<_>>(),
            vec![10, 6, 12]
        );
    }

    #[test]
    fn rejects_bad_shapes_and_subgroup_entries() {
        let p = ArrayParams::new(2, 2, 1, 1, 1).unwrap();
        assert!(PFArray::from_rows(p, &[vec![Some(1), Some(2)], vec![None, None]]).is_err());
        assert!(PFArray::from_rows(p, &[vec![Some(5), None], vec![None, Some(2)]]).is_err());
        assert!(PFArray::from_rows(p, &[vec![Some(1), None], vec![None, Some(2)]]).is_ok());
        let p2 = ArrayParams::new(1, 1, 1, 1, 2).unwrap();
        assert!(PFArray::from_rows(p2, &[vec![Some(2)]]).is_err());
    }

    #[test]
    fn diagonals() {
        assert_eq!(
            diagonal(3, 2),
            vec![Cell::new(2, 1), Cell::new(3, 2), Cell::new(1, 3)]
        );
        let a = nh34();
        assert!(!a.is_cyclically_k_diagonal());
    }

    #[test]
    fn negation() {
        let a = nh34();
        let b = a.with_negated(&[Cell::new(1, 1)]).unwrap();
        assert_eq!(b.get(1, 1).unwrap().signed(), -1);
        assert!(a.with_negated(&[Cell::new(5, 1)]).is_err());
    }
}
