//! Integer weights for the rank m symplectic root system, written in the
//! standard basis chi_1, ..., chi_m.
//!
//! The simple coroot pairings are
//!   <wt, alpha_i^vee> = wt_i - wt_{i+1}   for 1 <= i < m,
//!   <wt, alpha_m^vee> = wt_m,
//! and the Weyl group acts by permuting coordinates and flipping signs.

use std::fmt;

/// A weight in Z^m.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(m: usize) -> Self {
        Weight(vec![0; m])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn coord(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Pairing with the i-th simple coroot, 1 <= i <= m.
    pub fn pairing(&self, i: usize) -> i64 {
        let m = self.rank();
        assert!(
            i >= 1 && i <= m,
            "coroot index {i} out of range for rank {m}"
        );
        if i < m {
            self.0[i - 1] - self.0[i]
        } else {
            self.0[m - 1]
        }
    }

    /// Action of the i-th simple reflection: swap coordinates i, i+1 for
    /// i < m, negate the last coordinate for i = m.
    pub fn simple_reflection(&self, i: usize) -> Weight {
        let m = self.rank();
        assert!(
            i >= 1 && i <= m,
            "reflection index {i} out of range for rank {m}"
        );
        let mut c = self.0.clone();
        if i < m {
            c.swap(i - 1, i);
        } else {
            c[m - 1] = -c[m - 1];
        }
        Weight(c)
    }

    /// The rotation (w_1, ..., w_m) -> (-w_m, w_1, ..., w_{m-1}).
    pub fn signed_rotation(&self) -> Weight {
        let m = self.rank();
        let mut c = Vec::with_capacity(m);
        c.push(-self.0[m - 1]);
        c.extend_from_slice(&self.0[..m - 1]);
        Weight(c)
    }

    pub fn negate(&self) -> Weight {
        Weight(self.0.iter().map(|&x| -x).collect())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, ")")
    }
}
