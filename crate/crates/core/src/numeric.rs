//! Exact natural-number and rational arithmetic.
//!
//! Rationals are kept as a numerator/denominator pair of naturals and are not
//! required to be in lowest terms; equality and ordering are decided by
//! cross-multiplication so every representative of a value behaves the same.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision natural number.
pub type BigNat = BigUint;

/// `base^exp`, with `big_pow(x, 0) == 1`.
pub fn big_pow(base: &BigNat, exp: u32) -> BigNat {
    Pow::pow(base, exp)
}

/// Shorthand for `BigNat::from(x)` on machine integers.
pub fn nat<T: Into<BigNat>>(x: T) -> BigNat {
    x.into()
}

/// Non-negative rational with a nonzero denominator.
#[derive(Clone, Debug)]
pub struct ExactRational {
    num: BigNat,
    den: BigNat,
}

impl ExactRational {
    pub fn new(num: BigNat, den: BigNat) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidRational);
        }
        Ok(ExactRational { num, den })
    }

    /// `num/den` from machine integers.
    pub fn ratio(num: u64, den: u64) -> Result<Self> {
        Self::new(num.into(), den.into())
    }

    pub fn from_integer(value: BigNat) -> Self {
        ExactRational {
            num: value,
            den: BigNat::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(BigNat::zero())
    }

    pub fn one() -> Self {
        Self::from_integer(BigNat::one())
    }

    pub fn numer(&self) -> &BigNat {
        &self.num
    }

    pub fn denom(&self) -> &BigNat {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Lowest-terms representative of the same value.
    pub fn reduced(&self) -> Self {
        let g = self.num.gcd(&self.den);
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        ExactRational {
            num: &self.num / &g,
            den: &self.den / &g,
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, exp: u32) -> Self {
        ExactRational {
            num: big_pow(&self.num, exp),
            den: big_pow(&self.den, exp),
        }
    }

    /// Whether `value <= self`, decided without leaving the integers.
    pub fn ge_integer(&self, value: &BigNat) -> bool {
        value * &self.den <= self.num
    }

    /// Whether `value >= self`.
    pub fn le_integer(&self, value: &BigNat) -> bool {
        value * &self.den >= self.num
    }

    pub fn floor(&self) -> BigNat {
        &self.num / &self.den
    }

    pub fn ceil(&self) -> BigNat {
        let (q, r) = self.num.div_rem(&self.den);
        if r.is_zero() {
            q
        } else {
            q + 1u32
        }
    }

    /// Approximate value for human-readable output only. Very large or very
    /// small magnitudes saturate to `inf` or `0.0`.
    pub fn to_f64_approx(&self) -> f64 {
        let nb = self.num.bits();
        let db = self.den.bits();
        let ns = nb.saturating_sub(60);
        let ds = db.saturating_sub(60);
        let n = (&self.num >> ns).to_f64().unwrap_or(f64::INFINITY);
        let d = (&self.den >> ds).to_f64().unwrap_or(f64::INFINITY);
        let exp = ns as i64 - ds as i64;
        let exp = exp.clamp(i32::MIN as i64, i32::MAX as i64) as i32;
        (n / d) * 2f64.powi(exp)
    }
}

/// Ordering of the represented values, by cross-multiplication.
pub fn rational_cmp(a: &ExactRational, b: &ExactRational) -> Ordering {
    (&a.num * &b.den).cmp(&(&b.num * &a.den))
}

impl PartialEq for ExactRational {
    fn eq(&self, other: &Self) -> bool {
        rational_cmp(self, other) == Ordering::Equal
    }
}

impl Eq for ExactRational {}

impl PartialOrd for ExactRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRational {
    fn cmp(&self, other: &Self) -> Ordering {
        rational_cmp(self, other)
    }
}

impl Mul for &ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: &ExactRational) -> ExactRational {
        ExactRational {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

impl Mul for ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: ExactRational) -> ExactRational {
        &self * &rhs
    }
}

impl Add for &ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: &ExactRational) -> ExactRational {
        ExactRational {
            num: &self.num * &rhs.den + &rhs.num * &self.den,
            den: &self.den * &rhs.den,
        }
    }
}

impl Add for ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: ExactRational) -> ExactRational {
        &self + &rhs
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Serializes a [`BigNat`] as a decimal string.
pub fn serialize_nat<S: Serializer>(value: &BigNat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn repeated_mul(base: u64, exp: u32) -> BigNat {
        let mut acc = BigNat::one();
        for _ in 0..exp {
            acc *= base;
        }
        acc
    }

    fn q(n: u64, d: u64) -> ExactRational {
        ExactRational::ratio(n, d).unwrap()
    }

    #[test]
    fn big_pow_examples() {
        assert_eq!(big_pow(&nat(2u32), 10), nat(1024u32));
        assert_eq!(big_pow(&nat(7u32), 0), nat(1u32));
        assert_eq!(repeated_mul(6, 9), nat(10077696u32));
        assert_eq!(big_pow(&nat(6u32), 9), nat(10077696u32));
    }

    #[test]
    fn cmp_examples() {
        assert_eq!(rational_cmp(&q(2, 3), &q(4, 6)), Ordering::Equal);
        assert_eq!(rational_cmp(&q(1, 3), &q(1, 2)), Ordering::Less);
        assert_eq!(rational_cmp(&q(12, 27), &q(4, 9)), Ordering::Equal);
        assert_eq!(q(12, 27), q(4, 9));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            ExactRational::ratio(1, 0).unwrap_err(),
            Error::InvalidRational
        );
        assert_eq!(q(0, 5).recip().unwrap_err(), Error::InvalidRational);
    }

    #[test]
    fn floor_ceil_and_integer_comparisons() {
        let r = q(7, 2);
        assert_eq!(r.floor(), nat(3u32));
        assert_eq!(r.ceil(), nat(4u32));
        assert_eq!(q(8, 2).ceil(), nat(4u32));
        assert!(r.ge_integer(&nat(3u32)));
        assert!(!r.ge_integer(&nat(4u32)));
        assert!(r.le_integer(&nat(4u32)));
        assert!(!r.le_integer(&nat(3u32)));
    }

    #[test]
    fn reduced_and_display() {
        assert_eq!(q(12, 27).reduced().to_string(), "4/9");
        assert_eq!(q(0, 7).reduced().to_string(), "0/1");
        assert_eq!(q(12, 27).to_string(), "12/27");
    }

    #[test]
    fn approximate_value_survives_tiny_magnitudes() {
        let tiny = q(1, 10).pow(400);
        assert_eq!(tiny.to_f64_approx(), 0.0);
        let half =
            ExactRational::new(big_pow(&nat(3u32), 500), big_pow(&nat(3u32), 500) * 2u32).unwrap();
        assert!((half.to_f64_approx() - 0.5).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn cmp_matches_cross_multiplication(a in 0u64..1000, b in 1u64..1000, c in 0u64..1000, d in 1u64..1000) {
            let expected = (a as u128 * d as u128).cmp(&(c as u128 * b as u128));
            prop_assert_eq!(rational_cmp(&q(a, b), &q(c, d)), expected);
        }

        #[test]
        fn pow_adds_exponents(x in 0u64..50, a in 0u32..20, b in 0u32..20) {
            let x = nat(x);
            prop_assert_eq!(big_pow(&x, a + b), big_pow(&x, a) * big_pow(&x, b));
        }

        #[test]
        fn representative_independence(a in 0u64..500, b in 1u64..500, s in 1u64..50) {
            prop_assert_eq!(q(a, b), q(a * s, b * s));
            prop_assert_eq!(q(a, b).reduced(), q(a, b));
        }
    }
}
