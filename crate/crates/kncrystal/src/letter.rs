//! Letters of the symplectic alphabet 1 < 2 < ... < m < m-bar < ... < 1-bar.

use std::fmt;

use crate::error::Error;

/// One letter, stored as its rank in the total order: unbarred i at rank i,
/// barred i at rank 2m + 1 - i. Comparing ranks compares letters.
///
/// The rank encoding makes the crystal chain a plain increment: the raising
/// and lowering moves on single letters are rank - 1 and rank + 1.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    pub fn from_rank(rank: usize, m: usize) -> Result<Self, Error> {
        if rank == 0 || rank > 2 * m {
            return Err(Error::LetterRank { rank, bound: 2 * m });
        }
        Ok(Letter(rank as u8))
    }

    pub(crate) fn from_rank_unchecked(rank: usize) -> Self {
        debug_assert!(rank >= 1 && rank <= u8::MAX as usize);
        Letter(rank as u8)
    }

    pub fn unbarred(index: usize, m: usize) -> Result<Self, Error> {
        if index == 0 || index > m {
            return Err(Error::LetterIndex { index, m });
        }
        Ok(Letter(index as u8))
    }

    pub fn barred(index: usize, m: usize) -> Result<Self, Error> {
        if index == 0 || index > m {
            return Err(Error::LetterIndex { index, m });
        }
        Ok(Letter((2 * m + 1 - index) as u8))
    }

    pub fn rank(self) -> usize {
        self.0 as usize
    }

    pub fn is_barred(self, m: usize) -> bool {
        self.rank() > m
    }

    /// The index i of the letter, whether it is i or i-bar.
    pub fn index(self, m: usize) -> usize {
        if self.is_barred(m) {
            2 * m + 1 - self.rank()
        } else {
            self.rank()
        }
    }

    /// Signed form used in json: i for unbarred, -i for barred.
    pub fn to_signed(self, m: usize) -> i64 {
        let i = self.index(m) as i64;
        if self.is_barred(m) {
            -i
        } else {
            i
        }
    }

    pub fn from_signed(value: i64, m: usize) -> Result<Self, Error> {
        if value > 0 {
            Letter::unbarred(value as usize, m)
        } else if value < 0 {
            Letter::barred((-value) as usize, m)
        } else {
            Err(Error::LetterIndex { index: 0, m })
        }
    }

    /// Rendering with a combining macron for barred letters, e.g. "3\u{304}".
    pub fn display(self, m: usize) -> String {
        if self.is_barred(m) {
            format!("{}\u{304}", self.index(m))
        } else {
            self.index(m).to_string()
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r{}", self.0)
    }
}

/// All letters for rank m, in increasing order.
pub fn alphabet(m: usize) -> Vec<Letter> {
    (1..=2 * m).map(Letter::from_rank_unchecked).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_realizes_the_chain() {
        let m = 3;
        let expected = [
            Letter::unbarred(1, m).unwrap(),
            Letter::unbarred(2, m).unwrap(),
            Letter::unbarred(3, m).unwrap(),
            Letter::barred(3, m).unwrap(),
            Letter::barred(2, m).unwrap(),
            Letter::barred(1, m).unwrap(),
        ];
        let mut sorted = expected;
        sorted.sort();
        assert_eq!(sorted, expected);
        assert_eq!(alphabet(m), expected.to_vec());
    }

    #[test]
    fn rank_round_trip() {
        let m = 4;
        for rank in 1..=2 * m {
            let l = Letter::from_rank(rank, m).unwrap();
            assert_eq!(l.rank(), rank);
            let back = if l.is_barred(m) {
                Letter::barred(l.index(m), m).unwrap()
            } else {
                Letter::unbarred(l.index(m), m).unwrap()
            };
            assert_eq!(back, l);
        }
    }

    #[test]
    fn signed_round_trip_and_display() {
        let m = 3;
        let b2 = Letter::barred(2, m).unwrap();
        assert_eq!(b2.to_signed(m), -2);
        assert_eq!(Letter::from_signed(-2, m).unwrap(), b2);
        assert_eq!(b2.display(m), "2\u{304}");
        assert_eq!(Letter::unbarred(3, m).unwrap().display(m), "3");
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(Letter::from_rank(0, 2).is_err());
        assert!(Letter::from_rank(5, 2).is_err());
        assert!(Letter::unbarred(3, 2).is_err());
        assert!(Letter::from_signed(0, 2).is_err());
    }
}
