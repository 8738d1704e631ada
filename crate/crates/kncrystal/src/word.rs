//! Words in the tensor powers of the standard rank m symplectic crystal,
//! with raising and lowering operators computed by the signature rule.
//!
//! For the operator pair e_i, f_i a letter is marked minus when f_i can act
//! on it (the letters i and bar(i+1), which share the ranks i and 2m - i)
//! and plus when e_i can act (the letters i+1 and bar(i), ranks i + 1 and
//! 2m + 1 - i).  Scanning left to right, each minus cancels the nearest
//! open plus to its left.  Then f_i moves the rightmost unbracketed minus
//! one rank up, and e_i moves the leftmost unbracketed plus one rank down;
//! phi_i and epsilon_i count the survivors of each sign.

use crate::error::Error;
use crate::letter::Letter;
use crate::weight::Weight;

/// A word over the alphabet of rank m, read left to right.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word {
    m: usize,
    letters: Vec<Letter>,
}

pub(crate) fn f_applicable(letter: Letter, i: usize, m: usize) -> bool {
    let r = letter.rank();
    r == i || r == 2 * m - i
}

pub(crate) fn e_applicable(letter: Letter, i: usize, m: usize) -> bool {
    let r = letter.rank();
    r == i + 1 || r == 2 * m + 1 - i
}

impl Word {
    pub fn new(m: usize, letters: Vec<Letter>) -> Result<Self, Error> {
        for l in &letters {
            if l.rank() > 2 * m {
                return Err(Error::LetterRank {
                    rank: l.rank(),
                    bound: 2 * m,
                });
            }
        }
        Ok(Word { m, letters })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn weight(&self) -> Weight {
        let mut coords = vec![0i64; self.m];
        for l in &self.letters {
            let idx = l.index(self.m);
            if l.is_barred(self.m) {
                coords[idx - 1] -= 1;
            } else {
                coords[idx - 1] += 1;
            }
        }
        Weight::new(coords)
    }

    /// Runs the bracketing pass for the pair e_i, f_i and returns the
    /// 0-based positions of the unbracketed minuses and pluses, each list
    /// in increasing position order.
    pub fn bracket(&self, i: usize) -> (Vec<usize>, Vec<usize>) {
        assert!(i >= 1 && i <= self.m, "operator index {i} out of range");
        let mut open_minus = Vec::new();
        let mut pending_plus = Vec::new();
        for (pos, &l) in self.letters.iter().enumerate() {
            if e_applicable(l, i, self.m) {
                pending_plus.push(pos);
            } else if f_applicable(l, i, self.m) && pending_plus.pop().is_none() {
                open_minus.push(pos);
            }
        }
        (open_minus, pending_plus)
    }

    pub fn phi(&self, i: usize) -> usize {
        self.bracket(i).0.len()
    }

    pub fn epsilon(&self, i: usize) -> usize {
        self.bracket(i).1.len()
    }

    /// Position (0-based) of the letter f_i changes, if f_i does not vanish.
    pub fn f_position(&self, i: usize) -> Option<usize> {
        self.bracket(i).0.last().copied()
    }

    /// Position (0-based) of the letter e_i changes, if e_i does not vanish.
    pub fn e_position(&self, i: usize) -> Option<usize> {
        self.bracket(i).1.first().copied()
    }

    pub fn apply_f(&self, i: usize) -> Option<Word> {
        let pos = self.f_position(i)?;
        let mut letters = self.letters.clone();
        letters[pos] = Letter::from_rank_unchecked(letters[pos].rank() + 1);
        Some(Word { m: self.m, letters })
    }

    pub fn apply_e(&self, i: usize) -> Option<Word> {
        let pos = self.e_position(i)?;
        let mut letters = self.letters.clone();
        letters[pos] = Letter::from_rank_unchecked(letters[pos].rank() - 1);
        Some(Word { m: self.m, letters })
    }
}
