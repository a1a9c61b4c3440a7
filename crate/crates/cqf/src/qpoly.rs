//! Univariate polynomials in `q` with exact arbitrary-precision integer
//! coefficients. These are the coefficients of every CQF.
//!
//! Canonical form: trailing zero coefficients are trimmed and the zero
//! polynomial is the empty coefficient vector, so `==` is structural
//! equality.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::ser::{Error as SerError, SerializeSeq};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    /// `coeffs[i]` is the coefficient of `q^i`; no trailing zeros.
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `q^d`.
    pub fn q_power(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = BigInt::one();
        QPoly { coeffs }
    }

    /// Builds a polynomial from low-to-high coefficients, trimming trailing
    /// zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// Convenience constructor for tests and fixtures.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree of the polynomial, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exact evaluation at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Adds `other * q^shift` in place.
    pub fn add_shifted_assign(&mut self, other: &QPoly, shift: usize) {
        if other.is_zero() {
            return;
        }
        let need = other.coeffs.len() + shift;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, BigInt::zero());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i + shift] += c;
        }
        self.trim();
    }

    pub fn scale(&self, factor: &BigInt) -> QPoly {
        if factor.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Divides every coefficient exactly by `divisor`, or returns `None` if
    /// any coefficient is not divisible.
    pub fn div_exact(&self, divisor: &BigInt) -> Option<QPoly> {
        assert!(!divisor.is_zero(), "division by zero");
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (quot, rem) = num_integer_div_rem(c, divisor);
            if !rem.is_zero() {
                return None;
            }
            coeffs.push(quot);
        }
        Some(QPoly { coeffs })
    }

    /// The reversal `q^window * p(1/q)`, or `None` if `deg p > window`.
    pub fn reversed_in_window(&self, window: usize) -> Option<QPoly> {
        if let Some(d) = self.degree() {
            if d > window {
                return None;
            }
        }
        let mut coeffs = vec![BigInt::zero(); window + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[window - i] = c.clone();
        }
        Some(QPoly::from_coeffs(coeffs))
    }

    /// Whether `coeff_i == coeff_{window - i}` for all `i`.
    pub fn is_palindromic_in_window(&self, window: usize) -> bool {
        self.reversed_in_window(window)
            .is_some_and(|rev| rev == *self)
    }

    /// Palindromicity about the midpoint of the polynomial's own support.
    pub fn is_palindromic_own_center(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let lo = self.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        let hi = self.coeffs.len() - 1;
        (0..=(hi - lo)).all(|i| self.coeffs[lo + i] == self.coeffs[hi - i])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out.add_shifted_assign(rhs, 0);
        out
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        self.add_shifted_assign(rhs, 0);
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
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
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

// JSON form: a plain array of integers [c0, c1, ...]. Coefficients are
// emitted as JSON numbers with full precision (serde_json is built with
// arbitrary-precision numbers).
impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            let n: serde_json::Number = serde_json::from_str(&c.to_string())
                .map_err(|e| S::Error::custom(format!("coefficient: {e}")))?;
            seq.serialize_element(&n)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let nums = Vec::<serde_json::Number>::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(nums.len());
        for n in nums {
            let c: BigInt = n
                .to_string()
                .parse()
                .map_err(|e| D::Error::custom(format!("integer coefficient: {e}")))?;
            coeffs.push(c);
        }
        Ok(QPoly::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_form_trims_trailing_zeros() {
        let p = QPoly::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(QPoly::from_i64s(&[0, 0]), QPoly::zero());
    }

    #[test]
    fn arithmetic_basics() {
        let p = QPoly::from_i64s(&[1, 1]); // 1 + q
        let q = QPoly::from_i64s(&[-1, 1]); // -1 + q
        assert_eq!(&p * &q, QPoly::from_i64s(&[-1, 0, 1]));
        assert_eq!(&p + &q, QPoly::from_i64s(&[0, 2]));
        assert_eq!(&p - &p, QPoly::zero());
        assert_eq!(p.eval_one(), BigInt::from(2));
    }

    #[test]
    fn palindromicity_in_window() {
        // 1 + q about window 1: palindromic.
        assert!(QPoly::from_i64s(&[1, 1]).is_palindromic_in_window(1));
        // Zero polynomial is palindromic in any window.
        assert!(QPoly::zero().is_palindromic_in_window(5));
        // 1 + 2q about window 1 is not.
        assert!(!QPoly::from_i64s(&[1, 2]).is_palindromic_in_window(1));
        // Degree exceeding the window can never be palindromic there.
        assert!(!QPoly::from_i64s(&[0, 0, 1]).is_palindromic_in_window(1));
        // q + q^2 is palindromic about its own support (and about [0, 3],
        // where the zero constant term mirrors the missing cubic) but not
        // about [0, 2].
        let p = QPoly::from_i64s(&[0, 1, 1]);
        assert!(p.is_palindromic_own_center());
        assert!(p.is_palindromic_in_window(3));
        assert!(!p.is_palindromic_in_window(2));
    }

    #[test]
    fn exact_division() {
        let p = QPoly::from_i64s(&[2, 4, 6]);
        assert_eq!(
            p.div_exact(&BigInt::from(2)),
            Some(QPoly::from_i64s(&[1, 2, 3]))
        );
        assert_eq!(p.div_exact(&BigInt::from(4)), None);
    }

    #[test]
    fn json_round_trip_preserves_huge_coefficients() {
        let huge: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = QPoly::from_coeffs(vec![BigInt::from(-7), huge.clone()]);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, format!("[-7,{huge}]"));
        let back: QPoly = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }

    fn small_poly() -> impl Strategy<Value = QPoly> {
        proptest::collection::vec(-20i64..=20, 0..6).prop_map(|v| QPoly::from_i64s(&v))
    }

    proptest! {
        #[test]
        fn mul_commutes_and_distributes(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn window_reversal_is_involutive(a in small_poly(), extra in 0usize..4) {
            let window = a.degree().unwrap_or(0) + extra;
            let rev = a.reversed_in_window(window).unwrap();
            prop_assert_eq!(rev.reversed_in_window(window).unwrap(), a);
        }
    }
}
