//! Partitions, cells, hooks and the r statistic entering the hook content
//! product for symplectic tableau counts.

use std::fmt;

use crate::error::Error;

/// A cell of a Young diagram, row and column both 1-based.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// Weakly decreasing positive parts; the empty partition is allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The i-th part, 1-based, zero beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Row-major iteration over the cells of the diagram.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    /// Hook length h(i,j) = lambda_i + lambda'_j - i - j + 1.
    pub fn hook(&self, cell: Cell) -> Result<i64, Error> {
        if !self.contains(cell) {
            return Err(Error::CellOutsideShape {
                row: cell.row,
                col: cell.col,
            });
        }
        let conj = self.conjugate();
        Ok(self.part(cell.row) as i64 + conj.part(cell.col) as i64
            - cell.row as i64
            - cell.col as i64
            + 1)
    }

    /// The split statistic
    /// r(i,j) = lambda_i + lambda_j - i - j + 2          for i > j,
    /// r(i,j) = i + j - lambda'_i - lambda'_j            for i <= j.
    pub fn r_value(&self, cell: Cell) -> Result<i64, Error> {
        if !self.contains(cell) {
            return Err(Error::CellOutsideShape {
                row: cell.row,
                col: cell.col,
            });
        }
        let (i, j) = (cell.row as i64, cell.col as i64);
        if cell.row > cell.col {
            Ok(self.part(cell.row) as i64 + self.part(cell.col) as i64 - i - j + 2)
        } else {
            let conj = self.conjugate();
            Ok(i + j - conj.part(cell.row) as i64 - conj.part(cell.col) as i64)
        }
    }

    /// kappa(lambda) = sum over rows of (i - 1) * lambda_i.
    pub fn kappa(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}
