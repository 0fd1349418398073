//! Hybrid numbers `a + b i + c ε + d h` with `i^2 = -1`, `ε^2 = 0`, `h^2 = 1`
//! and `ih = -hi = ε + i`.
//!
//! Multiplication is associative but not commutative. The coefficient ring is
//! generic so the same code runs over [`Rational`] (sequence values) and over
//! [`crate::QuadExt`] (closed-form constants built from the characteristic
//! roots). Coefficients commute with the units.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::rational::Rational;
use crate::ring::CoeffRing;

/// Components are stored in the fixed order `s, i, e, h`; JSON output keeps
/// that key order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HybridNumber<R> {
    /// Scalar part.
    pub s: R,
    /// Coefficient of `i`.
    pub i: R,
    /// Coefficient of `ε`.
    pub e: R,
    /// Coefficient of `h`.
    pub h: R,
}

impl<R> HybridNumber<R> {
    pub const fn new(s: R, i: R, e: R, h: R) -> Self {
        HybridNumber { s, i, e, h }
    }

    pub fn components(&self) -> [&R; 4] {
        [&self.s, &self.i, &self.e, &self.h]
    }

    pub fn into_components(self) -> [R; 4] {
        [self.s, self.i, self.e, self.h]
    }

    pub fn from_components([s, i, e, h]: [R; 4]) -> Self {
        HybridNumber { s, i, e, h }
    }

    pub fn map<T>(&self, mut f: impl FnMut(&R) -> T) -> HybridNumber<T> {
        HybridNumber { s: f(&self.s), i: f(&self.i), e: f(&self.e), h: f(&self.h) }
    }

    pub fn try_map<T, E>(&self, mut f: impl FnMut(&R) -> Result<T, E>) -> Result<HybridNumber<T>, E> {
        Ok(HybridNumber { s: f(&self.s)?, i: f(&self.i)?, e: f(&self.e)?, h: f(&self.h)? })
    }
}

impl HybridNumber<Rational> {
    pub fn from_ints(s: i64, i: i64, e: i64, h: i64) -> Self {
        HybridNumber::new(s.into(), i.into(), e.into(), h.into())
    }
}

impl<R: CoeffRing> HybridNumber<R> {
    /// `k + 0i + 0ε + 0h`
    pub fn scalar(k: R) -> Self {
        let z = k.zero_like();
        HybridNumber { s: k, i: z.clone(), e: z.clone(), h: z }
    }

    pub fn zero_like(&self) -> Self {
        HybridNumber::scalar(self.s.zero_like())
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        HybridNumber {
            s: f(&self.s, &rhs.s),
            i: f(&self.i, &rhs.i),
            e: f(&self.e, &rhs.e),
            h: f(&self.h, &rhs.h),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip(rhs, R::plus)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip(rhs, R::minus)
    }

    pub fn neg(&self) -> Self {
        self.map(R::negated)
    }

    /// Multiplies every component by the coefficient `k`.
    pub fn scale(&self, k: &R) -> Self {
        self.map(|c| k.times(c))
    }

    /// Adds a coefficient to the scalar part only.
    pub fn add_scalar(&self, k: &R) -> Self {
        let mut out = self.clone();
        out.s = out.s.plus(k);
        out
    }

    /// Bilinear extension of the unit multiplication table.
    pub fn mul(&self, rhs: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.s, &self.i, &self.e, &self.h);
        let (a2, b2, c2, d2) = (&rhs.s, &rhs.i, &rhs.e, &rhs.h);
        let m = |x: &R, y: &R| x.times(y);
        let b1d2_minus_d1b2 = m(b1, d2).minus(&m(d1, b2));
        let s = m(a1, a2)
            .minus(&m(b1, b2))
            .plus(&m(b1, c2))
            .plus(&m(c1, b2))
            .plus(&m(d1, d2));
        let i = m(a1, b2).plus(&m(b1, a2)).plus(&b1d2_minus_d1b2);
        let e = m(a1, c2)
            .plus(&m(c1, a2))
            .plus(&b1d2_minus_d1b2)
            .minus(&m(c1, d2))
            .plus(&m(d1, c2));
        let h = m(a1, d2).plus(&m(d1, a2)).minus(&m(b1, c2)).plus(&m(c1, b2));
        HybridNumber { s, i, e, h }
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// `a - b i - c ε - d h`
    pub fn conjugate(&self) -> Self {
        HybridNumber {
            s: self.s.clone(),
            i: self.i.negated(),
            e: self.e.negated(),
            h: self.h.negated(),
        }
    }

    /// `C(z) = a^2 + (b - c)^2 - c^2 - d^2`, the scalar `z · conj(z)`.
    pub fn character(&self) -> R {
        let b_minus_c = self.i.minus(&self.e);
        self.s
            .times(&self.s)
            .plus(&b_minus_c.times(&b_minus_c))
            .minus(&self.e.times(&self.e))
            .minus(&self.h.times(&self.h))
    }

    /// `z w - w z`
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }
}

/// Sign of the character.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormClass {
    Positive,
    Null,
    Negative,
}

impl fmt::Display for NormClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NormClass::Positive => "positive",
            NormClass::Null => "null",
            NormClass::Negative => "negative",
        })
    }
}

/// `sqrt(|C(z)|)` as a float together with the sign class of `C(z)`.
/// The exact quantity is the character itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Norm {
    pub value: f64,
    pub class: NormClass,
}

impl HybridNumber<Rational> {
    pub fn norm(&self) -> Norm {
        let c = self.character();
        let class = if c.is_zero() {
            NormClass::Null
        } else if c.is_negative() {
            NormClass::Negative
        } else {
            NormClass::Positive
        };
        Norm { value: c.abs().to_f64().sqrt(), class }
    }
}

impl<'a, R: CoeffRing> Add<&'a HybridNumber<R>> for &'a HybridNumber<R> {
    type Output = HybridNumber<R>;
    fn add(self, rhs: &'a HybridNumber<R>) -> HybridNumber<R> {
        HybridNumber::add(self, rhs)
    }
}

impl<'a, R: CoeffRing> Sub<&'a HybridNumber<R>> for &'a HybridNumber<R> {
    type Output = HybridNumber<R>;
    fn sub(self, rhs: &'a HybridNumber<R>) -> HybridNumber<R> {
        HybridNumber::sub(self, rhs)
    }
}

impl<'a, R: CoeffRing> Mul<&'a HybridNumber<R>> for &'a HybridNumber<R> {
    type Output = HybridNumber<R>;
    fn mul(self, rhs: &'a HybridNumber<R>) -> HybridNumber<R> {
        HybridNumber::mul(self, rhs)
    }
}

impl<R: CoeffRing> Neg for &HybridNumber<R> {
    type Output = HybridNumber<R>;
    fn neg(self) -> HybridNumber<R> {
        HybridNumber::neg(self)
    }
}

impl<R: fmt::Debug> fmt::Debug for HybridNumber<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?}, {:?}, {:?})", self.s, self.i, self.e, self.h)
    }
}

impl<R: fmt::Display> fmt::Display for HybridNumber<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.s, self.i, self.e, self.h)
    }
}

/// The basis units in table order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unit {
    One,
    I,
    Epsilon,
    H,
}

impl Unit {
    pub const ALL: [Unit; 4] = [Unit::One, Unit::I, Unit::Epsilon, Unit::H];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Unit::One => "1",
            Unit::I => "i",
            Unit::Epsilon => "ε",
            Unit::H => "h",
        }
    }

    pub fn as_hybrid<R: CoeffRing>(self, like: &R) -> HybridNumber<R> {
        let mut c = [like.zero_like(), like.zero_like(), like.zero_like(), like.zero_like()];
        c[self.index()] = like.one_like();
        HybridNumber::from_components(c)
    }
}

/// Products of basis units, `table[row][col] = row · col`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisTable {
    cells: [[HybridNumber<i64>; 4]; 4],
}

const fn u(s: i64, i: i64, e: i64, h: i64) -> HybridNumber<i64> {
    HybridNumber::new(s, i, e, h)
}

impl BasisTable {
    pub fn standard() -> Self {
        BasisTable {
            cells: [
                // 1 · (1, i, ε, h)
                [u(1, 0, 0, 0), u(0, 1, 0, 0), u(0, 0, 1, 0), u(0, 0, 0, 1)],
                // i · (1, i, ε, h) = (i, -1, 1 - h, ε + i)
                [u(0, 1, 0, 0), u(-1, 0, 0, 0), u(1, 0, 0, -1), u(0, 1, 1, 0)],
                // ε · (1, i, ε, h) = (ε, 1 + h, 0, -ε)
                [u(0, 0, 1, 0), u(1, 0, 0, 1), u(0, 0, 0, 0), u(0, 0, -1, 0)],
                // h · (1, i, ε, h) = (h, -(ε + i), ε, 1)
                [u(0, 0, 0, 1), u(0, -1, -1, 0), u(0, 0, 1, 0), u(1, 0, 0, 0)],
            ],
        }
    }

    pub fn product(&self, row: Unit, col: Unit) -> &HybridNumber<i64> {
        &self.cells[row.index()][col.index()]
    }

    pub fn rows(&self) -> &[[HybridNumber<i64>; 4]; 4] {
        &self.cells
    }
}

/// Renders an integer unit combination as it is conventionally typeset:
/// terms ordered `1, ε, i, h`, and an all-negative sum of several terms
/// factored as `−(…)`.
pub fn render_unit_combination(z: &HybridNumber<i64>) -> String {
    let order = [(z.s, ""), (z.e, "ε"), (z.i, "i"), (z.h, "h")];
    let terms: Vec<(i64, &str)> = order.into_iter().filter(|(c, _)| *c != 0).collect();
    if terms.is_empty() {
        return "0".to_string();
    }
    if terms.len() > 1 && terms.iter().all(|(c, _)| *c < 0) {
        let negated = z.map(|c| -c);
        return format!("\u{2212}({})", render_unit_combination(&negated));
    }
    let mut out = String::new();
    for (k, (c, sym)) in terms.iter().enumerate() {
        let mag = c.unsigned_abs();
        if *c < 0 {
            out.push('\u{2212}');
        } else if k > 0 {
            out.push('+');
        }
        if sym.is_empty() || mag != 1 {
            out.push_str(&mag.to_string());
        }
        out.push_str(sym);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hy(s: i64, i: i64, e: i64, h: i64) -> HybridNumber<Rational> {
        HybridNumber::from_ints(s, i, e, h)
    }

    /// Bilinear product straight from the table, independent of `mul`.
    fn table_product(z: &HybridNumber<Rational>, w: &HybridNumber<Rational>) -> HybridNumber<Rational> {
        let table = BasisTable::standard();
        let mut acc = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        for row in Unit::ALL {
            for col in Unit::ALL {
                let coeff = z.components()[row.index()] * w.components()[col.index()];
                for (slot, unit) in acc.iter_mut().zip(table.product(row, col).components()) {
                    *slot = &*slot + &(&coeff * &Rational::from(*unit));
                }
            }
        }
        HybridNumber::from_components(acc)
    }

    #[test]
    fn componentwise_ops() {
        assert_eq!(&hy(0, 1, 1, 2) + &hy(1, 1, 2, 3), hy(1, 2, 3, 5));
        assert_eq!(-&hy(1, 0, 0, -1), hy(-1, 0, 0, 1));
        assert_eq!(hy(1, 1, 2, 3).scale(&Rational::from(2)), hy(2, 2, 4, 6));
    }

    #[test]
    fn unit_products_match_table() {
        let table = BasisTable::standard();
        for row in Unit::ALL {
            for col in Unit::ALL {
                let one = Rational::one();
                let got = row.as_hybrid(&one).mul(&col.as_hybrid(&one));
                let want = table.product(row, col).map(|c| Rational::from(*c));
                assert_eq!(got, want, "{} · {}", row.symbol(), col.symbol());
            }
        }
    }

    #[test]
    fn table_spot_values() {
        assert_eq!(hy(0, 1, 0, 0).mul(&hy(0, 0, 1, 0)), hy(1, 0, 0, -1));
        assert_eq!(hy(0, 0, 1, 0).mul(&hy(0, 1, 0, 0)), hy(1, 0, 0, 1));
        assert_eq!(hy(1, 1, 2, 3).mul(&hy(0, 1, 1, 2)), hy(8, 0, -1, 3));
        assert_eq!(table_product(&hy(1, 1, 2, 3), &hy(0, 1, 1, 2)), hy(8, 0, -1, 3));
    }

    #[test]
    fn closed_form_matches_table_expansion() {
        let samples = [hy(1, 2, 3, 4), hy(-3, 0, 5, -2), hy(0, 1, 1, 2), hy(7, -7, 1, 0)];
        for z in &samples {
            for w in &samples {
                assert_eq!(z.mul(w), table_product(z, w));
            }
        }
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(hy(1, 2, 3, 4).conjugate(), hy(1, -2, -3, -4));
        let z = hy(0, 1, 1, 2);
        assert_eq!(z.conjugate().conjugate(), z);
        let (a, b) = (hy(1, 1, 0, 0), hy(0, 0, 1, 1));
        assert_eq!((&a + &b).conjugate(), &a.conjugate() + &b.conjugate());
    }

    #[test]
    fn character_examples() {
        assert_eq!(hy(0, 0, 1, 0).character(), Rational::zero());
        assert_eq!(hy(1, 0, 0, 0).character(), Rational::one());
        assert_eq!(hy(0, 0, 0, 1).character(), Rational::from(-1));
        let z = hy(3, -1, 4, 2);
        assert_eq!(z.mul(&z.conjugate()), HybridNumber::scalar(z.character()));
    }

    #[test]
    fn norm_classes() {
        assert_eq!(hy(2, 0, 0, 0).norm(), Norm { value: 2.0, class: NormClass::Positive });
        assert_eq!(hy(0, 0, 1, 0).norm(), Norm { value: 0.0, class: NormClass::Null });
        assert_eq!(hy(0, 0, 0, 1).norm(), Norm { value: 1.0, class: NormClass::Negative });
    }

    #[test]
    fn commutators() {
        let z = hy(1, 2, 3, 4);
        assert!(z.commutator(&z).is_zero());
        assert_eq!(hy(0, 1, 0, 0).commutator(&hy(0, 0, 1, 0)), hy(0, 0, 0, -2));
        assert_eq!(hy(1, 1, 2, 3).commutator(&hy(0, 1, 1, 2)), hy(0, -2, -4, 2));
    }

    #[test]
    fn not_commutative() {
        let i = hy(0, 1, 0, 0);
        let eps = hy(0, 0, 1, 0);
        assert_ne!(i.mul(&eps), eps.mul(&i));
    }

    #[test]
    fn rendering() {
        let table = BasisTable::standard();
        assert_eq!(render_unit_combination(table.product(Unit::I, Unit::Epsilon)), "1\u{2212}h");
        assert_eq!(render_unit_combination(table.product(Unit::Epsilon, Unit::Epsilon)), "0");
        assert_eq!(render_unit_combination(table.product(Unit::H, Unit::I)), "\u{2212}(ε+i)");
        assert_eq!(render_unit_combination(table.product(Unit::Epsilon, Unit::H)), "\u{2212}ε");
        assert_eq!(render_unit_combination(table.product(Unit::I, Unit::H)), "ε+i");
        assert_eq!(render_unit_combination(table.product(Unit::I, Unit::I)), "\u{2212}1");
        assert_eq!(render_unit_combination(&u(2, -3, 0, 0)), "2\u{2212}3i");
    }

    #[test]
    fn json_key_order() {
        let json = serde_json::to_string(&hy(1, -2, 0, 3)).unwrap();
        assert_eq!(json, r#"{"s":"1","i":"-2","e":"0","h":"3"}"#);
    }
}
