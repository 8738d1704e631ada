//! Dense integer polynomials in q with exact arithmetic.
//!
//! Everything downstream counts things, so the only divisions allowed are
//! exact ones and every failure of exactness is an error rather than a
//! rounding. The brackets here are [k] = 1 - q^k, the factorials their
//! products, and evaluation at a root of unity is done by reducing modulo
//! the corresponding cyclotomic polynomial: the value is an integer
//! exactly when the residue is constant, and the residue itself is
//! surfaced when it is not.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Polynomial in q over the integers. Coefficients are stored densely
/// from the constant term up and never carry trailing zeros, so equality
/// of values is equality of representations.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        IntPoly::from_coeffs(vec![BigInt::from(c)])
    }

    /// Builds a polynomial from coefficients listed constant term first,
    /// trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// q^exp.
    pub fn monomial(exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = BigInt::one();
        IntPoly { coeffs }
    }

    /// The bracket [k] = 1 - q^k for k >= 1.
    pub fn q_bracket(k: usize) -> Self {
        assert!(k >= 1, "bracket index must be positive");
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = BigInt::one();
        coeffs[k] = -BigInt::one();
        IntPoly { coeffs }
    }

    /// The bracket factorial [k]! = [1][2]...[k], with [0]! = 1.
    pub fn q_factorial(k: usize) -> Self {
        let mut out = IntPoly::one();
        for j in 1..=k {
            out = &out * &IntPoly::q_bracket(j);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of q^k, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplication by q^exp.
    pub fn shifted(&self, exp: usize) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp];
        coeffs.extend_from_slice(&self.coeffs);
        IntPoly { coeffs }
    }

    /// Exact quotient self / divisor. Fails with [`Error::InexactDivision`]
    /// unless the division comes out with integer coefficients and zero
    /// remainder.
    pub fn checked_div_exact(&self, divisor: &IntPoly) -> Result<IntPoly, Error> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let nd = self.degree().expect("nonzero");
        let dd = divisor.degree().expect("nonzero");
        if nd < dd {
            return Err(Error::InexactDivision);
        }
        let lead = divisor.coeffs.last().expect("nonzero");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            if rem[k + dd].is_zero() {
                continue;
            }
            let (c, r) = rem[k + dd].div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let sub = &c * dc;
                rem[k + i] -= sub;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(IntPoly::from_coeffs(quot))
    }

    /// Remainder modulo a monic polynomial.
    pub fn rem_monic(&self, modulus: &IntPoly) -> IntPoly {
        let md = modulus.degree().expect("modulus must be nonzero");
        assert!(
            modulus.coeffs.last().expect("nonzero").is_one(),
            "modulus must be monic"
        );
        let mut rem = self.coeffs.clone();
        while rem.len() > md {
            let k = rem.len() - 1 - md;
            let c = rem.last().expect("nonempty").clone();
            if !c.is_zero() {
                for (i, mc) in modulus.coeffs.iter().enumerate() {
                    let sub = &c * mc;
                    rem[k + i] -= sub;
                }
            }
            rem.pop();
        }
        IntPoly::from_coeffs(rem)
    }

    /// Remainder modulo q^n - 1: every exponent is folded to its class
    /// mod n.
    pub fn reduce_mod_cyclic(&self, n: usize) -> IntPoly {
        assert!(n >= 1, "cyclic order must be positive");
        let mut out = vec![BigInt::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k % n] += c;
        }
        IntPoly::from_coeffs(out)
    }

    /// Nonzero terms as (degree, coefficient) pairs, degrees ascending,
    /// with the coefficient rendered in decimal. This is the JSON wire
    /// form for polynomials.
    pub fn to_degree_pairs(&self) -> Vec<(usize, String)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.to_string()))
            .collect()
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[k] -= c;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a * b;
                coeffs[i + j] += prod;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if k == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}")?;
                }
                if k == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{k}")?;
                }
            }
        }
        Ok(())
    }
}

/// Cyclotomic polynomials for one fixed order n, with exact evaluation of
/// integer polynomials at the powers of a primitive n-th root of unity.
///
/// The table is built by the defining recursion: Phi_d is q^d - 1 divided
/// by every Phi_e with e a proper divisor of d. Construction verifies the
/// factorization q^n - 1 = prod over d | n of Phi_d before anything else
/// trusts the table.
pub struct CyclotomicContext {
    order: usize,
    phis: BTreeMap<usize, IntPoly>,
}

impl CyclotomicContext {
    pub fn new(order: usize) -> Result<Self, Error> {
        assert!(order >= 1, "order must be positive");
        let mut phis: BTreeMap<usize, IntPoly> = BTreeMap::new();
        for d in 1..=order {
            if !order.is_multiple_of(d) {
                continue;
            }
            let mut p = &IntPoly::monomial(d) - &IntPoly::one();
            for (&e, phi) in &phis {
                if d % e == 0 {
                    p = p.checked_div_exact(phi)?;
                }
            }
            phis.insert(d, p);
        }
        let mut product = IntPoly::one();
        for phi in phis.values() {
            product = &product * phi;
        }
        if product != &IntPoly::monomial(order) - &IntPoly::one() {
            return Err(Error::Internal(format!(
                "cyclotomic factors of q^{order} - 1 fail to multiply back"
            )));
        }
        Ok(CyclotomicContext { order, phis })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Phi_e for a divisor e of the order.
    pub fn phi(&self, e: usize) -> Option<&IntPoly> {
        self.phis.get(&e)
    }

    /// Value of p at omega^d, omega a primitive root of unity of the
    /// context's order. The power omega^d has multiplicative order
    /// e = n / gcd(d, n), and p(omega^d) lies in Z exactly when the
    /// residue of p modulo Phi_e is constant; otherwise the residue is
    /// returned unevaluated.
    pub fn eval_at_root(&self, p: &IntPoly, d: usize) -> Result<BigInt, IntPoly> {
        let e = self.order / d.gcd(&self.order);
        let phi = self.phis.get(&e).expect("e divides the order");
        let residue = p.rem_monic(phi);
        match residue.degree() {
            None => Ok(BigInt::zero()),
            Some(0) => Ok(residue.coeff(0)),
            Some(_) => Err(residue),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn brackets_and_factorials_expand() {
        assert_eq!(IntPoly::q_bracket(1), poly(&[1, -1]));
        assert_eq!(IntPoly::q_bracket(3), poly(&[1, 0, 0, -1]));
        assert_eq!(IntPoly::q_factorial(0), IntPoly::one());
        assert_eq!(IntPoly::q_factorial(2), poly(&[1, -1, -1, 1]));
    }

    #[test]
    fn arithmetic_matches_hand_expansion() {
        let a = poly(&[1, 1]);
        assert_eq!(&a * &a, poly(&[1, 2, 1]));
        assert_eq!(&a - &a, IntPoly::zero());
        assert_eq!(&poly(&[1]) + &poly(&[0, 1]), poly(&[1, 1]));
        assert_eq!(-&a, poly(&[-1, -1]));
        assert_eq!(a.shifted(2), poly(&[0, 0, 1, 1]));
        assert_eq!(poly(&[2, 0, -2]).eval_at_one(), BigInt::zero());
    }

    #[test]
    fn exact_division_succeeds_and_inexact_fails() {
        let sextic = IntPoly::q_bracket(6);
        let quadratic = IntPoly::q_bracket(2);
        assert_eq!(
            sextic.checked_div_exact(&quadratic).unwrap(),
            poly(&[1, 0, 1, 0, 1])
        );
        assert!(matches!(
            IntPoly::q_bracket(3).checked_div_exact(&quadratic),
            Err(Error::InexactDivision)
        ));
        assert!(matches!(
            poly(&[1, 0, 1]).checked_div_exact(&poly(&[1, 1])),
            Err(Error::InexactDivision)
        ));
        assert!(matches!(
            IntPoly::one().checked_div_exact(&IntPoly::zero()),
            Err(Error::InexactDivision)
        ));
    }

    #[test]
    fn monic_remainder_and_cyclic_reduction() {
        let modulus = poly(&[1, 0, 1]);
        assert_eq!(IntPoly::monomial(4).rem_monic(&modulus), IntPoly::one());
        assert_eq!(IntPoly::monomial(2).rem_monic(&modulus), poly(&[-1]));
        let x = poly(&[0, 1, 2, 2, 3, 3, 2, 2, 1]);
        assert_eq!(x.reduce_mod_cyclic(4), poly(&[4, 4, 4, 4]));
        assert_eq!(poly(&[5, -2]).reduce_mod_cyclic(1), poly(&[3]));
    }

    #[test]
    fn small_cyclotomic_polynomials_are_the_classical_ones() {
        let ctx = CyclotomicContext::new(24).unwrap();
        assert_eq!(ctx.phi(1), Some(&poly(&[-1, 1])));
        assert_eq!(ctx.phi(2), Some(&poly(&[1, 1])));
        assert_eq!(ctx.phi(4), Some(&poly(&[1, 0, 1])));
        assert_eq!(ctx.phi(6), Some(&poly(&[1, -1, 1])));
        assert_eq!(ctx.phi(8), Some(&poly(&[1, 0, 0, 0, 1])));
        assert_eq!(ctx.phi(12), Some(&poly(&[1, 0, -1, 0, 1])));
        assert_eq!(ctx.phi(5), None);
    }

    #[test]
    fn cyclotomic_product_check_holds_for_every_order_up_to_twenty_four() {
        for n in 1..=24 {
            assert!(CyclotomicContext::new(n).is_ok(), "order {n}");
        }
    }

    #[test]
    fn root_of_unity_evaluation_distinguishes_integers_from_residues() {
        let ctx = CyclotomicContext::new(4).unwrap();
        let all_ones = poly(&[1, 1, 1, 1]);
        assert_eq!(ctx.eval_at_root(&all_ones, 0), Ok(BigInt::from(4)));
        for d in 1..4 {
            assert_eq!(ctx.eval_at_root(&all_ones, d), Ok(BigInt::zero()));
        }
        assert_eq!(
            ctx.eval_at_root(&IntPoly::q_bracket(2), 2),
            Ok(BigInt::zero())
        );
        assert_eq!(
            ctx.eval_at_root(&IntPoly::monomial(1), 1),
            Err(poly(&[0, 1]))
        );
    }

    #[test]
    fn display_orders_terms_by_ascending_degree() {
        assert_eq!(poly(&[1, -2, 0, 1]).to_string(), "1 - 2q + q^3");
        assert_eq!(poly(&[-1, 1]).to_string(), "-1 + q");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(
            poly(&[0, 3]).to_degree_pairs(),
            vec![(1usize, "3".to_string())]
        );
    }
}
