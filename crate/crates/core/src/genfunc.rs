//! Formal power-series expansion of the generating function
//!
//! ```text
//! Σ HJ_r t^r = (N0 + t·N1) / (1 - p t - q t²)
//! ```
//!
//! The numerators are built from their closed forms in `(p, q, a, b)` and
//! `1/(1 - p t - q t²)` is expanded by the binomial sum
//! `u_r = Σ_k C(r-k, k) p^(r-2k) q^k`, so the comparison with the recurrence
//! is not circular.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Pow;
use serde::Serialize;

use crate::hybrid::HybridNumber;
use crate::rational::Rational;
use crate::sequences::{hybrid_seq, HoradamParams, SeqKind};

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesExpansion {
    pub params: HoradamParams,
    /// `coeffs[r]` is the coefficient of `t^r`.
    pub coeffs: Vec<HybridNumber<Rational>>,
}

/// `N0 = a + b i + (pb + qa) ε + ((p² + q) b + pqa) h`
pub fn numerator_constant(params: &HoradamParams) -> HybridNumber<Rational> {
    let (p, q, a, b) = big(params);
    HybridNumber::new(
        Rational::from(a.clone()),
        Rational::from(b.clone()),
        Rational::from(&p * &b + &q * &a),
        Rational::from((&p * &p + &q) * &b + &p * &q * &a),
    )
}

/// `N1 = (b - pa) + qa i + qb ε + (pqb + q² a) h`
pub fn numerator_linear(params: &HoradamParams) -> HybridNumber<Rational> {
    let (p, q, a, b) = big(params);
    HybridNumber::new(
        Rational::from(&b - &p * &a),
        Rational::from(&q * &a),
        Rational::from(&q * &b),
        Rational::from(&p * &q * &b + &q * &q * &a),
    )
}

fn big(params: &HoradamParams) -> (BigInt, BigInt, BigInt, BigInt) {
    (BigInt::from(params.p), BigInt::from(params.q), BigInt::from(params.a), BigInt::from(params.b))
}

/// Coefficients `u_0..=u_n` of `1/(1 - p t - q t²)` by the binomial sum.
pub fn reciprocal_series(p: i64, q: i64, n: usize) -> Vec<BigInt> {
    let (p, q) = (BigInt::from(p), BigInt::from(q));
    (0..=n)
        .map(|r| {
            (0..=r / 2)
                .map(|k| {
                    binomial(BigInt::from(r - k), BigInt::from(k))
                        * Pow::pow(&p, (r - 2 * k) as u32)
                        * Pow::pow(&q, k as u32)
                })
                .sum()
        })
        .collect()
}

/// `coeffs[r] = N0·u_r + N1·u_{r-1}` for `r` in `0..=n`.
pub fn expand(params: &HoradamParams, n: usize) -> SeriesExpansion {
    let n0 = numerator_constant(params);
    let n1 = numerator_linear(params);
    let u: Vec<Rational> = reciprocal_series(params.p, params.q, n).into_iter().map(Rational::from).collect();
    let coeffs = (0..=n)
        .map(|r| {
            let head = n0.scale(&u[r]);
            if r == 0 {
                head
            } else {
                head.add(&n1.scale(&u[r - 1]))
            }
        })
        .collect();
    SeriesExpansion { params: *params, coeffs }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpansionEntry {
    pub r: usize,
    pub coeff: HybridNumber<Rational>,
    pub expected: HybridNumber<Rational>,
    pub matches_seq: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpansionReport {
    pub params: HoradamParams,
    pub entries: Vec<ExpansionEntry>,
    /// `u_r = p u_{r-1} + q u_{r-2}` for every `r ≥ 2`.
    pub series_recurrence_holds: bool,
}

impl ExpansionReport {
    pub fn all_match(&self) -> bool {
        self.series_recurrence_holds && self.entries.iter().all(|e| e.matches_seq)
    }
}

/// Compares every series coefficient with the recurrence value `HJ_r`.
pub fn check_expansion(params: &HoradamParams, n: usize) -> ExpansionReport {
    let series = expand(params, n);
    let entries = series
        .coeffs
        .into_iter()
        .enumerate()
        .map(|(r, coeff)| {
            let expected = hybrid_seq(params, SeqKind::Horadam, r as i64);
            ExpansionEntry { r, matches_seq: coeff == expected, coeff, expected }
        })
        .collect();
    let u = reciprocal_series(params.p, params.q, n);
    let series_recurrence_holds = u.windows(3).all(|w| w[2] == &w[1] * params.p + &w[0] * params.q);
    ExpansionReport { params: *params, entries, series_recurrence_holds }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_terms() {
        let params = HoradamParams::new(3, -2, 5, 7).unwrap();
        let series = expand(&params, 1);
        assert_eq!(series.coeffs[0], hybrid_seq(&params, SeqKind::Horadam, 0));
        assert_eq!(series.coeffs[1], hybrid_seq(&params, SeqKind::Horadam, 1));
    }

    #[test]
    fn fibonacci_fifth_coefficient() {
        let params = HoradamParams::fibonacci(1, 1).unwrap();
        assert_eq!(expand(&params, 5).coeffs[5], HybridNumber::from_ints(5, 8, 13, 21));
    }

    #[test]
    fn reciprocal_series_values() {
        let u = reciprocal_series(1, 1, 7);
        let want: Vec<BigInt> = [1, 1, 2, 3, 5, 8, 13, 21].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(u, want);
        // 1/(1 - 2t + 3t²) = 1 + 2t + t² - 4t³ ...
        let u = reciprocal_series(2, -3, 3);
        let want: Vec<BigInt> = [1, 2, 1, -4].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(u, want);
    }

    #[test]
    fn checks() {
        assert!(check_expansion(&HoradamParams::fibonacci(1, 1).unwrap(), 32).all_match());
        assert!(check_expansion(&HoradamParams::lucas(2, 1).unwrap(), 16).all_match());
        let single = check_expansion(&HoradamParams::fibonacci(1, 1).unwrap(), 0);
        assert_eq!(single.entries.len(), 1);
        assert!(single.all_match());
    }
}
