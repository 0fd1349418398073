//! Exact signed rationals backed by arbitrary-precision integers.
//!
//! Values are always stored in lowest terms with a positive denominator, so
//! structural equality is numeric equality. Zero is `0/1`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ArithError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

/// The four field operations plus negation, for callers that dispatch on an
/// operator value rather than calling the trait impls directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RationalOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
}

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer<I: Into<BigInt>>(n: I) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// Builds `num/den`, reducing to lowest terms.
    pub fn new<N: Into<BigInt>, D: Into<BigInt>>(num: N, den: D) -> Result<Self, ArithError> {
        let den = den.into();
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
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

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational, ArithError> {
        Rational::one().checked_div(self)
    }

    /// Integer power; negative exponents invert the base.
    pub fn pow(&self, exp: i64) -> Result<Rational, ArithError> {
        if exp < 0 && self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let mut base = if exp < 0 { self.recip()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Rational::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Applies `op` to `(u, v)`; `v` is ignored for [`RationalOp::Neg`].
    pub fn apply(op: RationalOp, u: &Rational, v: &Rational) -> Result<Rational, ArithError> {
        Ok(match op {
            RationalOp::Add => u + v,
            RationalOp::Sub => u - v,
            RationalOp::Mul => u * v,
            RationalOp::Div => u.checked_div(v)?,
            RationalOp::Neg => -u,
        })
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

/// Panics on a zero divisor; use [`Rational::checked_div`] for a `Result`.
impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        self.checked_div(rhs).expect("rational division by zero")
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ArithError;

    /// Accepts `n`, `n/d`, with an optional sign; U+2212 is read as `-`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let cleaned = s.trim().replace('\u{2212}', "-");
        let bad = || ArithError::Parse(s.to_string());
        let parse_int = |t: &str| -> Result<BigInt, ArithError> {
            let t = t.trim();
            let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        match cleaned.split_once('/') {
            None => Ok(Rational::from_integer(parse_int(&cleaned)?)),
            Some((n, d)) => {
                let den = parse_int(d)?;
                if den.is_zero() {
                    return Err(ArithError::DivisionByZero);
                }
                Rational::new(parse_int(n)?, den)
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn field_ops() {
        assert_eq!(Rational::apply(RationalOp::Add, &r(1, 2), &r(1, 3)).unwrap(), r(5, 6));
        assert_eq!(Rational::apply(RationalOp::Div, &r(1, 1), &r(1, 1)).unwrap(), r(1, 1));
        assert_eq!(Rational::apply(RationalOp::Mul, &r(-3, 4), &r(2, 3)).unwrap(), r(-1, 2));
        assert_eq!(Rational::apply(RationalOp::Sub, &r(1, 2), &r(1, 3)).unwrap(), r(1, 6));
        assert_eq!(Rational::apply(RationalOp::Neg, &r(1, 2), &r(0, 1)).unwrap(), r(-1, 2));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            Rational::apply(RationalOp::Div, &r(1, 1), &Rational::zero()),
            Err(ArithError::DivisionByZero)
        );
        assert_eq!(Rational::new(1, 0), Err(ArithError::DivisionByZero));
        assert_eq!(Rational::zero().pow(-1), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn canonical_form() {
        let x = r(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        let z = r(0, -7);
        assert_eq!(z.denom(), &BigInt::from(1));
        assert_eq!(z, Rational::zero());
    }

    #[test]
    fn text_form() {
        assert_eq!(r(-3, 2).to_string(), "-3/2");
        assert_eq!(r(5, 1).to_string(), "5");
        assert_eq!("5/1".parse::<Rational>().unwrap(), r(5, 1));
        assert_eq!("\u{2212}3/2".parse::<Rational>().unwrap(), r(-3, 2));
        assert_eq!(" 4/6 ".parse::<Rational>().unwrap(), r(2, 3));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        assert!("1/".parse::<Rational>().is_err());
        assert!("--1".parse::<Rational>().is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(r(-2, 3).pow(3).unwrap(), r(-8, 27));
        assert_eq!(r(-2, 3).pow(-2).unwrap(), r(9, 4));
        assert_eq!(r(7, 5).pow(0).unwrap(), Rational::one());
    }

    #[test]
    fn json_is_a_string() {
        let json = serde_json::to_string(&r(-3, 2)).unwrap();
        assert_eq!(json, "\"-3/2\"");
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r(-3, 2));
    }
}
