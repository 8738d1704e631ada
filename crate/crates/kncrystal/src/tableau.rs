//! Kashiwara-Nakashima symplectic tableaux of rank m.
//!
//! A filling of a Young diagram with letters 1 < ... < m < m-bar < ... <
//! 1-bar is a KN tableau when
//!
//! 1. rows weakly increase left to right and columns strictly increase top
//!    to bottom,
//! 2. any column holding both i and i-bar, with i in the p-th box from the
//!    top and i-bar in the q-th box from the bottom, has p + q <= i,
//! 3. for letters i <= j placed in adjacent columns as i, j, j-bar, i-bar
//!    in rows p <= q < r <= s, with i in the left column, i-bar in the
//!    right column and the pair j, j-bar together in one of the two, the
//!    rows satisfy (q - p) + (s - r) < j - i.
//!
//! Crystal operators act through the column reading word, which lists each
//! column bottom to top, leftmost column first.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::letter::Letter;
use crate::partition::{Cell, Partition};
use crate::weight::Weight;
use crate::word::Word;

/// Witness that a filling fails one of the defining conditions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    ShapeNotPartition,
    RowOrder {
        row: usize,
        col: usize,
    },
    ColumnOrder {
        row: usize,
        col: usize,
    },
    OneColumn {
        col: usize,
        index: usize,
        p: usize,
        q: usize,
    },
    TwoColumn {
        left_col: usize,
        i: usize,
        j: usize,
        p: usize,
        q: usize,
        r: usize,
        s: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ShapeNotPartition => {
                write!(f, "row lengths must be positive and weakly decreasing")
            }
            Violation::RowOrder { row, col } => {
                write!(f, "row {row} decreases at column {col}")
            }
            Violation::ColumnOrder { row, col } => {
                write!(f, "column {col} does not strictly increase at row {row}")
            }
            Violation::OneColumn { col, index, p, q } => write!(
                f,
                "column {col} holds {index} in box {p} from the top and its bar \
                 in box {q} from the bottom, but {p}+{q} > {index}"
            ),
            Violation::TwoColumn {
                left_col,
                i,
                j,
                p,
                q,
                r,
                s,
            } => write!(
                f,
                "columns {left_col} and {} hold {i}, {j}, bar {j}, bar {i} in rows \
                 {p}, {q}, {r}, {s} with ({q}-{p})+({s}-{r}) >= {j}-{i}",
                left_col + 1
            ),
        }
    }
}

/// Checks the in-column condition on a single complete column, 1-based
/// column index used only for the witness.
pub(crate) fn one_column_violation(m: usize, col: &[Letter], col_idx: usize) -> Option<Violation> {
    let h = col.len();
    for (pos, &l) in col.iter().enumerate() {
        if !l.is_barred(m) {
            continue;
        }
        let index = l.index(m);
        if let Some(p0) = col.iter().position(|&x| x.rank() == index) {
            let p = p0 + 1;
            let q = h - pos;
            if p + q > index {
                return Some(Violation::OneColumn {
                    col: col_idx,
                    index,
                    p,
                    q,
                });
            }
        }
    }
    None
}

fn row_of(col: &[Letter], rank: usize) -> Option<usize> {
    col.iter().position(|&x| x.rank() == rank).map(|p| p + 1)
}

/// Checks the adjacent-column condition on a complete pair of columns.
pub(crate) fn two_column_violation(
    m: usize,
    left: &[Letter],
    right: &[Letter],
    left_idx: usize,
) -> Option<Violation> {
    for i in 1..=m {
        let Some(p) = row_of(left, i) else { continue };
        let Some(s) = row_of(right, 2 * m + 1 - i) else {
            continue;
        };
        for j in i..=m {
            let splits = [
                (row_of(right, j), row_of(right, 2 * m + 1 - j)),
                (row_of(left, j), row_of(left, 2 * m + 1 - j)),
            ];
            for (q, r) in splits {
                let (Some(q), Some(r)) = (q, r) else { continue };
                if p <= q && q < r && r <= s && (q - p) + (s - r) >= j - i {
                    return Some(Violation::TwoColumn {
                        left_col: left_idx,
                        i,
                        j,
                        p,
                        q,
                        r,
                        s,
                    });
                }
            }
        }
    }
    None
}

/// A symplectic tableau. The derived order compares entries row by row,
/// left to right, in alphabet order, which fixes the canonical listing of
/// any set of tableaux of a common shape.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct KNTableau {
    m: usize,
    rows: Vec<Vec<Letter>>,
}

#[derive(Serialize, Deserialize)]
struct TabJson {
    shape: Vec<usize>,
    rows: Vec<Vec<String>>,
}

impl KNTableau {
    pub fn new(m: usize, rows: Vec<Vec<Letter>>) -> Result<Self, Error> {
        let lens: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        let shape_ok = lens.iter().all(|&l| l > 0) && lens.windows(2).all(|w| w[0] >= w[1]);
        if !shape_ok {
            return Err(Error::InvalidTableau(Violation::ShapeNotPartition));
        }
        if rows.len() > m {
            return Err(Error::TooManyRows {
                rows: rows.len(),
                m,
            });
        }
        for row in &rows {
            for l in row {
                if l.rank() > 2 * m {
                    return Err(Error::LetterRank {
                        rank: l.rank(),
                        bound: 2 * m,
                    });
                }
            }
        }
        let t = KNTableau { m, rows };
        match t.check() {
            None => Ok(t),
            Some(v) => Err(Error::InvalidTableau(v)),
        }
    }

    pub(crate) fn from_rows_unchecked(m: usize, rows: Vec<Vec<Letter>>) -> Self {
        KNTableau { m, rows }
    }

    /// The tableau of the given shape whose i-th row is filled with the
    /// letter i. It is the unique highest weight element of its crystal.
    pub fn highest_weight(shape: &Partition, m: usize) -> Result<Self, Error> {
        if shape.len() > m {
            return Err(Error::TooManyRows {
                rows: shape.len(),
                m,
            });
        }
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| vec![Letter::from_rank_unchecked(i + 1); len])
            .collect();
        Ok(KNTableau { m, rows })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect())
            .expect("tableau rows always form a partition")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn entry(&self, cell: Cell) -> Option<Letter> {
        self.rows
            .get(cell.row.checked_sub(1)?)?
            .get(cell.col.checked_sub(1)?)
            .copied()
    }

    pub fn column(&self, j: usize) -> Vec<Letter> {
        self.rows
            .iter()
            .filter_map(|row| row.get(j - 1))
            .copied()
            .collect()
    }

    pub fn columns(&self) -> Vec<Vec<Letter>> {
        let width = self.rows.first().map_or(0, |r| r.len());
        (1..=width).map(|j| self.column(j)).collect()
    }

    /// Returns a witness for the first failed condition, or None when the
    /// filling is a KN tableau. Assumes the rows already form a partition
    /// shape.
    pub fn check(&self) -> Option<Violation> {
        for (r, row) in self.rows.iter().enumerate() {
            for c in 1..row.len() {
                if row[c] < row[c - 1] {
                    return Some(Violation::RowOrder {
                        row: r + 1,
                        col: c + 1,
                    });
                }
            }
        }
        let cols = self.columns();
        for (c, col) in cols.iter().enumerate() {
            for r in 1..col.len() {
                if col[r] <= col[r - 1] {
                    return Some(Violation::ColumnOrder {
                        row: r + 1,
                        col: c + 1,
                    });
                }
            }
        }
        for (c, col) in cols.iter().enumerate() {
            if let Some(v) = one_column_violation(self.m, col, c + 1) {
                return Some(v);
            }
        }
        for (c, pair) in cols.windows(2).enumerate() {
            if let Some(v) = two_column_violation(self.m, &pair[0], &pair[1], c + 1) {
                return Some(v);
            }
        }
        None
    }

    pub fn weight(&self) -> Weight {
        let mut coords = vec![0i64; self.m];
        for row in &self.rows {
            for l in row {
                let idx = l.index(self.m);
                coords[idx - 1] += if l.is_barred(self.m) { -1 } else { 1 };
            }
        }
        Weight::new(coords)
    }

    /// Cells in column reading order: each column bottom to top, leftmost
    /// column first.
    pub fn reading_cells(&self) -> Vec<Cell> {
        let mut cells = Vec::with_capacity(self.size());
        let width = self.rows.first().map_or(0, |r| r.len());
        for j in 1..=width {
            let height = self.rows.iter().filter(|r| r.len() >= j).count();
            for i in (1..=height).rev() {
                cells.push(Cell::new(i, j));
            }
        }
        cells
    }

    pub fn reading_word(&self) -> Word {
        let letters = self
            .reading_cells()
            .iter()
            .map(|&c| self.entry(c).expect("reading cells lie in the shape"))
            .collect();
        Word::new(self.m, letters).expect("tableau letters fit the alphabet")
    }

    pub(crate) fn with_replaced(&self, cell: Cell, letter: Letter) -> KNTableau {
        let mut rows = self.rows.clone();
        rows[cell.row - 1][cell.col - 1] = letter;
        KNTableau { m: self.m, rows }
    }

    pub fn to_json_string(&self) -> String {
        let shape = self.rows.iter().map(|r| r.len()).collect();
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|l| l.to_signed(self.m).to_string()).collect())
            .collect();
        serde_json::to_string(&TabJson { shape, rows }).expect("plain data serializes")
    }

    /// Parses the json form, taking the rank m from context since the
    /// entries alone do not determine it.
    pub fn from_json_str(s: &str, m: usize) -> Result<Self, Error> {
        let parsed: TabJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        let mut rows = Vec::with_capacity(parsed.rows.len());
        for row in &parsed.rows {
            let mut letters = Vec::with_capacity(row.len());
            for entry in row {
                let v: i64 = entry
                    .parse()
                    .map_err(|_| Error::Json(format!("entry {entry:?} is not a signed integer")))?;
                letters.push(Letter::from_signed(v, m)?);
            }
            rows.push(letters);
        }
        let t = KNTableau::new(m, rows)?;
        let lens: Vec<usize> = t.rows.iter().map(|r| r.len()).collect();
        if parsed.shape != lens {
            return Err(Error::Json(format!(
                "shape field {:?} does not match row lengths {:?}",
                parsed.shape, lens
            )));
        }
        Ok(t)
    }
}

impl fmt::Display for KNTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, " / ")?;
            }
            for (c, l) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", l.display(self.m))?;
            }
        }
        write!(f, "]")
    }
}
