use thiserror::Error;

use crate::tableau::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("shape has {rows} rows, at most m={m} are allowed")]
    TooManyRows { rows: usize, m: usize },

    #[error("cell ({row},{col}) lies outside the shape")]
    CellOutsideShape { row: usize, col: usize },

    #[error("letter index {index} outside 1..={m}")]
    LetterIndex { index: usize, m: usize },

    #[error("letter rank {rank} outside 1..={bound}")]
    LetterRank { rank: usize, bound: usize },

    #[error("not a valid symplectic tableau: {0}")]
    InvalidTableau(Violation),

    #[error("weight sum {sum} has the wrong parity for {n} boxes")]
    WeightParity { n: usize, sum: i64 },

    #[error("weight sum {sum} is out of range for {n} boxes")]
    WeightRange { n: usize, sum: i64 },

    #[error("enumeration needs {needed} tableaux, cap is {cap}")]
    CapExceeded { needed: String, cap: usize },

    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,

    #[error("hook content product is not an integer for this shape")]
    NonIntegralCount,

    #[error("enumerated {got} tableaux but the hook content count is {expected}")]
    CountMismatch { got: usize, expected: String },

    #[error("value at the chosen root of unity is not an integer, residue {residue}")]
    NonIntegerValue { residue: String },

    #[error("action maps a member outside the tableau set")]
    ActionLeftSet,

    #[error("orbit walk exceeded {max} steps without closing")]
    OrbitTooLong { max: usize },

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("malformed tableau json: {0}")]
    Json(String),
}
