//! The commutative ring `Q[s]/(s^2 - D)`.
//!
//! The characteristic roots of `t^2 - p t - q` are `(p ± s)/2` with
//! `D = p^2 + 4q`. All arithmetic is formal, so `D` may be negative or a
//! perfect square; only the final projection back to `Q` requires the
//! `s`-component to vanish.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::de::{self, Deserializer, Visitor};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{ArithError, ParamError};
use crate::rational::Rational;
use crate::ring::CoeffRing;

/// `x + y·s` with `s^2 = d`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    x: Rational,
    y: Rational,
    d: BigInt,
}

impl QuadExt {
    pub fn new(x: Rational, y: Rational, d: impl Into<BigInt>) -> Result<Self, ArithError> {
        let d = d.into();
        if Zero::is_zero(&d) {
            return Err(ArithError::ZeroDiscriminant);
        }
        Ok(QuadExt { x, y, d })
    }

    /// Embeds a rational into the ring with the same `s^2` as `self`.
    pub fn lift(&self, x: Rational) -> QuadExt {
        QuadExt { x, y: Rational::zero(), d: self.d.clone() }
    }

    /// The generator `s` itself.
    pub fn sqrt_d(d: impl Into<BigInt>) -> Result<Self, ArithError> {
        QuadExt::new(Rational::zero(), Rational::one(), d)
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    fn check_same(&self, rhs: &QuadExt) -> Result<(), ArithError> {
        if self.d != rhs.d {
            return Err(ArithError::MismatchedExtension {
                left: self.d.to_string(),
                right: rhs.d.to_string(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &QuadExt) -> Result<QuadExt, ArithError> {
        self.check_same(rhs)?;
        Ok(QuadExt { x: &self.x + &rhs.x, y: &self.y + &rhs.y, d: self.d.clone() })
    }

    pub fn checked_sub(&self, rhs: &QuadExt) -> Result<QuadExt, ArithError> {
        self.check_same(rhs)?;
        Ok(QuadExt { x: &self.x - &rhs.x, y: &self.y - &rhs.y, d: self.d.clone() })
    }

    /// `(x1 x2 + D y1 y2) + (x1 y2 + x2 y1) s`
    pub fn checked_mul(&self, rhs: &QuadExt) -> Result<QuadExt, ArithError> {
        self.check_same(rhs)?;
        let d = Rational::from(self.d.clone());
        Ok(QuadExt {
            x: &(&self.x * &rhs.x) + &(&d * &(&self.y * &rhs.y)),
            y: &(&self.x * &rhs.y) + &(&rhs.x * &self.y),
            d: self.d.clone(),
        })
    }

    pub fn scale(&self, k: &Rational) -> QuadExt {
        QuadExt { x: &self.x * k, y: &self.y * k, d: self.d.clone() }
    }

    /// `x - y s`
    pub fn conj(&self) -> QuadExt {
        QuadExt { x: self.x.clone(), y: -&self.y, d: self.d.clone() }
    }

    /// `u · conj(u) = x^2 - D y^2`
    pub fn norm(&self) -> Rational {
        let d = Rational::from(self.d.clone());
        &(&self.x * &self.x) - &(&d * &(&self.y * &self.y))
    }

    pub fn inverse(&self) -> Result<QuadExt, ArithError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ArithError::NotInvertible(self.to_string()));
        }
        let inv = n.recip()?;
        Ok(self.conj().scale(&inv))
    }

    pub fn checked_div(&self, rhs: &QuadExt) -> Result<QuadExt, ArithError> {
        self.check_same(rhs)?;
        self.checked_mul(&rhs.inverse()?)
    }

    /// Division by the generator: `(x + y s)/s = y + (x/D) s`.
    pub fn div_by_sqrt_d(&self) -> QuadExt {
        let d = Rational::from(self.d.clone());
        QuadExt { x: self.y.clone(), y: &self.x / &d, d: self.d.clone() }
    }

    /// Binary exponentiation; negative exponents go through the inverse.
    pub fn pow(&self, n: i64) -> Result<QuadExt, ArithError> {
        let mut base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = self.lift(Rational::one());
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

    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }

    /// Projects back to `Q`; a nonzero `s`-part is an error.
    pub fn rational_part(&self) -> Result<Rational, ArithError> {
        if !self.y.is_zero() {
            return Err(ArithError::IrrationalResidue(self.to_string()));
        }
        Ok(self.x.clone())
    }
}

/// Characteristic roots `(α, β) = ((p + s)/2, (p - s)/2)` of `t^2 - p t - q`,
/// with `s^2 = p^2 + 4q`.
pub fn roots(p: i64, q: i64) -> Result<(QuadExt, QuadExt), ParamError> {
    if q == 0 {
        return Err(ParamError::ZeroQ);
    }
    let d: BigInt = BigInt::from(p) * p + BigInt::from(q) * 4;
    if Zero::is_zero(&d) {
        return Err(ParamError::RepeatedRoot { p, q });
    }
    let half = Rational::new(1, 2).expect("nonzero");
    let half_p = &Rational::from(p) * &half;
    let alpha = QuadExt { x: half_p.clone(), y: half.clone(), d: d.clone() };
    let beta = QuadExt { x: half_p, y: -half, d };
    Ok((alpha, beta))
}

macro_rules! panicking_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        /// Panics when the operands live in different extensions.
        impl<'a> $trait<&'a QuadExt> for &'a QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &'a QuadExt) -> QuadExt {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                (&self).$method(&rhs)
            }
        }
    };
}

panicking_op!(Add, add, checked_add);
panicking_op!(Sub, sub, checked_sub);
panicking_op!(Mul, mul, checked_mul);

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt { x: -&self.x, y: -&self.y, d: self.d.clone() }
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

impl CoeffRing for QuadExt {
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
    fn zero_like(&self) -> Self {
        self.lift(Rational::zero())
    }
    fn one_like(&self) -> Self {
        self.lift(Rational::one())
    }
    fn int_like(&self, n: i64) -> Self {
        self.lift(Rational::from(n))
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_zero() {
            return write!(f, "{}", self.x);
        }
        if self.x.is_zero() {
            write!(f, "({})s", self.y)?;
        } else {
            write!(f, "{} + ({})s", self.x, self.y)?;
        }
        write!(f, " [s^2={}]", self.d)
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})s [s^2={}]", self.x, self.y, self.d)
    }
}

impl Serialize for QuadExt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("QuadExt", 3)?;
        st.serialize_field("x", &self.x)?;
        st.serialize_field("y", &self.y)?;
        // Out-of-range discriminants fall back to a decimal string.
        match self.d.to_i64() {
            Some(d) => st.serialize_field("D", &d)?,
            None => st.serialize_field("D", &self.d.to_string())?,
        }
        st.end()
    }
}

#[derive(Deserialize)]
struct QuadExtRepr {
    x: Rational,
    y: Rational,
    #[serde(rename = "D", deserialize_with = "big_int_field")]
    d: BigInt,
}

fn big_int_field<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigInt, D::Error> {
    struct BigIntVisitor;
    impl<'de> Visitor<'de> for BigIntVisitor {
        type Value = BigInt;
        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("an integer or a decimal integer string")
        }
        fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
            Ok(BigInt::from(v))
        }
        fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
            Ok(BigInt::from(v))
        }
        fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
            v.parse().map_err(E::custom)
        }
    }
    deserializer.deserialize_any(BigIntVisitor)
}

impl<'de> Deserialize<'de> for QuadExt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = QuadExtRepr::deserialize(deserializer)?;
        QuadExt::new(repr.x, repr.y, repr.d).map_err(de::Error::custom)
    }
}
