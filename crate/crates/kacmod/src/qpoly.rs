//! Exact integer-coefficient polynomials in q, stored as dense coefficient
//! lists in canonical form (no trailing zeros). Coefficients are
//! arbitrary-precision so correctness never depends on their size.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::Error as _;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        QPolynomial::from_coeffs(vec![BigInt::from(c)])
    }

    /// c * q^k.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::from(c);
        QPolynomial::from_coeffs(coeffs)
    }

    /// (-q)^k.
    pub fn neg_q_pow(k: usize) -> Self {
        QPolynomial::monomial(if k.is_multiple_of(2) { 1 } else { -1 }, k)
    }

    /// (1 - q)^r.
    pub fn one_minus_q_pow(r: usize) -> Self {
        let base = QPolynomial::from_coeffs(vec![BigInt::one(), -BigInt::one()]);
        let mut acc = QPolynomial::one();
        for _ in 0..r {
            acc = acc.mul(&base);
        }
        acc
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        QPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of q^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn neg(&self) -> Self {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        QPolynomial::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }

    /// Exact evaluation at an integer point.
    pub fn eval(&self, q: i64) -> BigInt {
        let q = BigInt::from(q);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &q + c;
        }
        acc
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficients as i64 for JSON output; the values arising here are
    /// tiny, so a failed conversion signals a bug.
    pub fn to_i64_coeffs(&self) -> Result<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| {
                c.to_i64().ok_or_else(|| {
                    Error::Internal(format!("polynomial coefficient {c} overflows i64"))
                })
            })
            .collect()
    }
}

/// Serializes as the dense coefficient list `[c0, c1, ...]`.
impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = self.to_i64_coeffs().map_err(S::Error::custom)?;
        coeffs.serialize(serializer)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
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
            let show_coeff = !abs.is_one() || i == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            if i == 1 {
                write!(f, "q")?;
            } else if i > 1 {
                write!(f, "q^{i}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_form_trims_trailing_zeros() {
        let p = QPolynomial::from_i64_coeffs(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(QPolynomial::from_i64_coeffs(&[0, 0]).degree(), None);
    }

    #[test]
    fn neg_q_pow_and_sum_identity() {
        assert_eq!(QPolynomial::neg_q_pow(0), QPolynomial::one());
        assert_eq!(
            QPolynomial::neg_q_pow(1),
            QPolynomial::from_i64_coeffs(&[0, -1])
        );
        // sum over theta of (-q)^|theta| = (1 - q)^r
        for r in 0..=5usize {
            let mut sum = QPolynomial::zero();
            for mask in 0u32..(1 << r) {
                sum = sum.add(&QPolynomial::neg_q_pow(mask.count_ones() as usize));
            }
            assert_eq!(sum, QPolynomial::one_minus_q_pow(r));
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(QPolynomial::zero().to_string(), "0");
        assert_eq!(QPolynomial::one().to_string(), "1");
        assert_eq!(QPolynomial::neg_q_pow(1).to_string(), "-q");
        assert_eq!(QPolynomial::neg_q_pow(2).to_string(), "q^2");
        assert_eq!(QPolynomial::one_minus_q_pow(2).to_string(), "1 - 2q + q^2");
    }

    fn arb_poly() -> impl Strategy<Value = QPolynomial> {
        proptest::collection::vec(-6i64..=6, 0..6).prop_map(|v| QPolynomial::from_i64_coeffs(&v))
    }

    proptest! {
        #[test]
        fn eval_is_a_ring_homomorphism(a in arb_poly(), b in arb_poly(), q in -3i64..=3) {
            prop_assert_eq!(a.add(&b).eval(q), a.eval(q) + b.eval(q));
            prop_assert_eq!(a.mul(&b).eval(q), a.eval(q) * b.eval(q));
            prop_assert_eq!(a.sub(&b).eval(q), a.eval(q) - b.eval(q));
        }

        #[test]
        fn mul_is_commutative_and_add_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        }
    }
}
