//! The pwr statistic and the three routes to its generating polynomial
//! over a full tableau set: the direct sum of q^pwr over members, the
//! q-analogue of the hook content product shifted by q^kappa, and a
//! quotient of determinants. Integer counting comes from the same hook
//! content product evaluated at q = 1.
//!
//! The statistic gives an entry i the value i - 1 and an entry bar i the
//! value 2m - i, so pwr of a tableau only depends on its weight chi and
//! the box count n:
//!
//! ```text
//!   pwr = sum_i (i - 1) chi_i + (2m - 1)(n - |chi|) / 2
//! ```
//!
//! with |chi| the coordinate sum. For a cell the hook h is the usual one
//! and the symplectic content r is
//!
//! ```text
//!   r(i, j) = lambda_i + lambda_j - i - j + 2    for i > j,
//!   r(i, j) = i + j - lambda^t_i - lambda^t_j    for i <= j,
//! ```
//!
//! giving the count prod (2m + r) / prod h and its q-analogue with each
//! integer k replaced by the bracket [k] = 1 - q^k.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::partition::Partition;
use crate::tableau::KNTableau;
use crate::weight::Weight;

use super::intpoly::IntPoly;

/// The pwr statistic summed over the entries of a tableau.
pub fn pwr_tab(t: &KNTableau) -> usize {
    let m = t.m();
    t.rows()
        .iter()
        .flatten()
        .map(|l| {
            if l.is_barred(m) {
                2 * m - l.index(m)
            } else {
                l.index(m) - 1
            }
        })
        .sum()
}

/// The pwr statistic computed from a weight and a box count alone. The
/// box count and the coordinate sum must have equal parity and the sum
/// must lie in [-n, n]; both failures are hard errors because they mean
/// the weight cannot come from a tableau with n boxes.
pub fn pwr_wt(chi: &Weight, n: usize) -> Result<i64, Error> {
    let m = chi.rank() as i64;
    let s = chi.sum();
    let boxes = n as i64;
    if (boxes - s) % 2 != 0 {
        return Err(Error::WeightParity { n, sum: s });
    }
    if s.abs() > boxes {
        return Err(Error::WeightRange { n, sum: s });
    }
    let linear: i64 = chi
        .coords()
        .iter()
        .enumerate()
        .map(|(i, &c)| i as i64 * c)
        .sum();
    Ok(linear + (2 * m - 1) * (boxes - s) / 2)
}

/// Generating polynomial of pwr over a list of tableaux.
pub fn x_poly(members: &[KNTableau]) -> IntPoly {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for t in members {
        let p = pwr_tab(t);
        if coeffs.len() <= p {
            coeffs.resize(p + 1, BigInt::zero());
        }
        coeffs[p] += BigInt::one();
    }
    IntPoly::from_coeffs(coeffs)
}

fn hook_and_factor(shape: &Partition, m: usize) -> Result<Vec<(i64, i64)>, Error> {
    if shape.len() > m {
        return Err(Error::TooManyRows {
            rows: shape.len(),
            m,
        });
    }
    let mut pairs = Vec::with_capacity(shape.size());
    for cell in shape.cells() {
        let h = shape.hook(cell)?;
        let factor = 2 * m as i64 + shape.r_value(cell)?;
        if h <= 0 || factor <= 0 {
            return Err(Error::NonIntegralCount);
        }
        pairs.push((factor, h));
    }
    Ok(pairs)
}

/// Number of tableaux of the given shape on 2m letters, as the exact
/// integer prod (2m + r) / prod h.
pub fn hook_content_count(shape: &Partition, m: usize) -> Result<BigInt, Error> {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (factor, h) in hook_and_factor(shape, m)? {
        num *= factor;
        den *= h;
    }
    let (quot, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::NonIntegralCount);
    }
    Ok(quot)
}

/// q-analogue of the hook content product, prod [2m + r] / prod [h].
/// Common bracket sizes are cancelled as multisets first, so a single
/// exact polynomial division remains.
pub fn f_sp(shape: &Partition, m: usize) -> Result<IntPoly, Error> {
    let mut multiplicity: BTreeMap<i64, i64> = BTreeMap::new();
    for (factor, h) in hook_and_factor(shape, m)? {
        *multiplicity.entry(factor).or_insert(0) += 1;
        *multiplicity.entry(h).or_insert(0) -= 1;
    }
    let mut num = IntPoly::one();
    let mut den = IntPoly::one();
    for (&k, &count) in &multiplicity {
        let bracket = IntPoly::q_bracket(k as usize);
        for _ in 0..count.abs() {
            if count > 0 {
                num = &num * &bracket;
            } else {
                den = &den * &bracket;
            }
        }
    }
    num.checked_div_exact(&den)
}

/// The staircase parts mu_i = lambda_i + m - i for i = 1..m, strictly
/// decreasing with mu_m >= 0. These index the rows of the determinant
/// whose quotient gives the pwr generating polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StaircaseParts {
    mu: Vec<usize>,
}

impl StaircaseParts {
    pub fn new(shape: &Partition, m: usize) -> Result<Self, Error> {
        if shape.len() > m {
            return Err(Error::TooManyRows {
                rows: shape.len(),
                m,
            });
        }
        let mu: Vec<usize> = (1..=m).map(|i| shape.part(i) + m - i).collect();
        debug_assert!(mu.windows(2).all(|w| w[0] > w[1]));
        Ok(StaircaseParts { mu })
    }

    pub fn empty(m: usize) -> Self {
        StaircaseParts::new(&Partition::empty(), m).expect("the empty shape always fits")
    }

    pub fn mu(&self) -> &[usize] {
        &self.mu
    }

    pub fn m(&self) -> usize {
        self.mu.len()
    }
}

/// Determinant of the m by m matrix with (1-based) entry
///
/// ```text
///   q^((j - 1)(mu_i + 1)) - q^((2m - j)(mu_i + 1))
/// ```
///
/// expanded by cofactors along the leading column, memoized over the set
/// of rows remaining: every subset of rows is paired with the trailing
/// columns of matching size, so the table has 2^m entries.
pub fn determinant_raw(parts: &StaircaseParts) -> Result<IntPoly, Error> {
    let m = parts.m();
    if m > 16 {
        return Err(Error::CapExceeded {
            needed: format!("2^{m} cofactor minors"),
            cap: 1 << 16,
        });
    }
    if m == 0 {
        return Ok(IntPoly::one());
    }
    let entry = |row: usize, col: usize| {
        let e = parts.mu[row] + 1;
        &IntPoly::monomial(col * e) - &IntPoly::monomial((2 * m - 1 - col) * e)
    };
    let full = (1usize << m) - 1;
    let mut minors: Vec<Option<IntPoly>> = vec![None; full + 1];
    minors[0] = Some(IntPoly::one());
    for mask in 1..=full {
        let col = m - mask.count_ones() as usize;
        let mut det = IntPoly::zero();
        let mut positive = true;
        for row in 0..m {
            if mask & (1 << row) == 0 {
                continue;
            }
            let minor = minors[mask ^ (1 << row)]
                .as_ref()
                .expect("smaller masks are filled first");
            let term = &entry(row, col) * minor;
            det = if positive { &det + &term } else { &det - &term };
            positive = !positive;
        }
        minors[mask] = Some(det);
    }
    Ok(minors[full].take().expect("just filled"))
}

/// Product form of the same determinant:
///
/// ```text
///   q^(sum (i - 1)(mu_i + 1)) prod_i [mu_i + 1]
///     prod_(i<j) [mu_i - mu_j] [mu_i + mu_j + 2]
/// ```
pub fn closed_form_det(parts: &StaircaseParts) -> IntPoly {
    let m = parts.m();
    let shift: usize = parts
        .mu
        .iter()
        .enumerate()
        .map(|(i, &mu)| i * (mu + 1))
        .sum();
    let mut out = IntPoly::monomial(shift);
    for &mu in &parts.mu {
        out = &out * &IntPoly::q_bracket(mu + 1);
    }
    for i in 0..m {
        for j in i + 1..m {
            out = &out * &IntPoly::q_bracket(parts.mu[i] - parts.mu[j]);
            out = &out * &IntPoly::q_bracket(parts.mu[i] + parts.mu[j] + 2);
        }
    }
    out
}

/// The empty-shape determinant collapsed into bracket factorials,
/// q^(sum (i - 1)(m - i + 1)) prod_i [2i - 1]!.
pub fn closed_form_denominator(m: usize) -> IntPoly {
    let shift: usize = (1..=m).map(|i| (i - 1) * (m - i + 1)).sum();
    let mut out = IntPoly::monomial(shift);
    for i in 1..=m {
        out = &out * &IntPoly::q_factorial(2 * i - 1);
    }
    out
}

/// The pwr generating polynomial as the exact quotient of the shape's
/// determinant by the empty shape's.
pub fn determinant_poly(shape: &Partition, m: usize) -> Result<IntPoly, Error> {
    let num = determinant_raw(&StaircaseParts::new(shape, m)?)?;
    let den = determinant_raw(&StaircaseParts::empty(m))?;
    num.checked_div_exact(&den)
}
