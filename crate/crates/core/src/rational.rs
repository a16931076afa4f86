//! Exact rationals used for densities, discrepancies and bounds.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// An exact fraction in lowest terms with a positive denominator.
///
/// Displays as `NUM/DEN` (always with the slash, `1/1` for one) so the
/// text form is the same on the command line and in CSV output.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rational(BigRational);

impl Rational {
    /// Panics if `den == 0`.
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rational(BigRational::new(num, den))
    }

    pub fn integer(v: i128) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Rational(BigRational::from_integer(v))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// Numerator and denominator as `i128`, when they fit.
    pub fn to_i128_parts(&self) -> Option<(i128, i128)> {
        Some((self.numer().to_i128()?, self.denom().to_i128()?))
    }

    /// `1 - self`.
    pub fn complement(&self) -> Self {
        Rational::one() - self.clone()
    }

    pub fn pow(&self, e: u32) -> Self {
        Rational(num_traits::pow(self.0.clone(), e as usize))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Smallest integer `m >= 0` with `m * m >= self`. Zero for non-positive values.
    pub fn ceil_sqrt(&self) -> BigInt {
        if !self.0.is_positive() {
            return BigInt::zero();
        }
        let (a, b) = (self.numer(), self.denom());
        // floor(sqrt(a / b)) is floor(sqrt(floor(a / b))); adjust upward from there.
        let mut m = a.div_floor(b).sqrt();
        while &(&m * &m * b) < a {
            m += 1;
        }
        m
    }

    /// Largest integer `m >= 0` with `m * m <= self`. Zero for non-positive values.
    pub fn floor_sqrt(&self) -> BigInt {
        let c = self.ceil_sqrt();
        if Rational::from_bigint(&c * &c) > *self {
            c - 1
        } else {
            c
        }
    }

    pub fn into_inner(self) -> BigRational {
        self.0
    }

    pub fn as_inner(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::integer(v as i128)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `NUM/DEN` or a bare integer. Decimals are rejected.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidInput(format!("expected NUM/DEN rational, got {s:?}"));
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
        }
        Ok(Rational::from_big(num, den))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational($tr::$m(self.0, rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $m(self, rhs: &'a Rational) -> Rational {
                Rational($tr::$m(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

/// A probability `num/den` in `[0, 1]` with machine-sized parts, for the
/// cleared-denominator comparisons in the hot loops.
///
/// Parts are limited to `i64` so that products such as `den * e(X)` with
/// `e(X) <= C(n, 2)` stay comfortably inside `i128`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Prob {
    pub num: i128,
    pub den: i128,
}

impl Prob {
    pub fn from_rational(p: &Rational) -> Result<Self, Error> {
        if p.is_negative() || p > &Rational::one() {
            return Err(Error::InvalidInput(format!("probability {p} outside [0, 1]")));
        }
        let num = p.numer().to_i64();
        let den = p.denom().to_i64();
        match (num, den) {
            (Some(num), Some(den)) => Ok(Prob {
                num: num as i128,
                den: den as i128,
            }),
            _ => Err(Error::InvalidInput(format!(
                "probability {p} has parts wider than 64 bits"
            ))),
        }
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(self.num, self.den)
    }

    /// `1 - p`.
    pub fn complement(self) -> Prob {
        Prob {
            num: self.den - self.num,
            den: self.den,
        }
    }

    /// `d >= p * k`, without rounding.
    #[inline]
    pub fn at_least(self, d: i128, k: i128) -> bool {
        d * self.den >= self.num * k
    }

    /// `d <= p * k`, without rounding.
    #[inline]
    pub fn at_most(self, d: i128, k: i128) -> bool {
        d * self.den <= self.num * k
    }

    /// `ceil(p * k)` for `k >= 0`.
    #[inline]
    pub fn ceil_mul(self, k: i128) -> i128 {
        (self.num * k + self.den - 1).div_euclid(self.den)
    }
}

impl fmt::Display for Prob {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_rational().fmt(f)
    }
}

/// `C(k, 2)`.
#[inline]
pub fn choose2(k: usize) -> u64 {
    let k = k as u64;
    k * k.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_display() {
        assert_eq!(Rational::new(4, 6).to_string(), "2/3");
        assert_eq!(Rational::new(3, -6).to_string(), "-1/2");
        assert_eq!(Rational::one().to_string(), "1/1");
    }

    #[test]
    fn parse_forms() {
        assert_eq!("1/2".parse::<Rational>().unwrap(), Rational::new(1, 2));
        assert_eq!(" 3 ".parse::<Rational>().unwrap(), Rational::integer(3));
        assert!("0.5".parse::<Rational>().is_err());
        assert!("1/0".parse::<Rational>().is_err());
    }

    #[test]
    fn ceil_sqrt_exact() {
        assert_eq!(Rational::integer(12).ceil_sqrt(), BigInt::from(4));
        assert_eq!(Rational::integer(16).ceil_sqrt(), BigInt::from(4));
        assert_eq!(Rational::integer(17).ceil_sqrt(), BigInt::from(5));
        assert_eq!(Rational::new(1, 4).ceil_sqrt(), BigInt::from(1));
        assert_eq!(Rational::zero().ceil_sqrt(), BigInt::from(0));
        for k in 1..200i128 {
            let m = Rational::integer(k).ceil_sqrt().to_i128().unwrap();
            assert!(m * m >= k && (m - 1) * (m - 1) < k, "k={k}");
        }
    }

    #[test]
    fn prob_comparisons() {
        let p = Prob::from_rational(&Rational::new(1, 2)).unwrap();
        assert!(p.at_least(2, 4));
        assert!(!p.at_least(1, 3));
        assert_eq!(p.ceil_mul(3), 2);
        assert_eq!(p.ceil_mul(4), 2);
        assert!(Prob::from_rational(&Rational::new(3, 2)).is_err());
    }
}
