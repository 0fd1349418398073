//! Scalar `(p, q)`-Fibonacci, `(p, q)`-Lucas and Horadam sequences over all
//! integer indices, and the hybrid sequences built from four consecutive
//! terms.
//!
//! Negative indices follow the backward recurrence
//! `J_{n-2} = (J_n - p J_{n-1}) / q`, the unique two-sided extension; it gives
//! `F_{-1} = 1/q`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::ParamError;
use crate::hybrid::HybridNumber;
use crate::quadext::roots;
use crate::rational::Rational;
use crate::ring::CoeffRing;

/// Recurrence `J_n = p J_{n-1} + q J_{n-2}` with seeds `J_0 = a`, `J_1 = b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HoradamParams {
    pub p: i64,
    pub q: i64,
    pub a: i64,
    pub b: i64,
}

impl HoradamParams {
    pub fn new(p: i64, q: i64, a: i64, b: i64) -> Result<Self, ParamError> {
        let params = HoradamParams { p, q, a, b };
        params.validate()?;
        Ok(params)
    }

    /// Seeds `(0, 1)`.
    pub fn fibonacci(p: i64, q: i64) -> Result<Self, ParamError> {
        Self::new(p, q, 0, 1)
    }

    /// Seeds `(2, p)`.
    pub fn lucas(p: i64, q: i64) -> Result<Self, ParamError> {
        Self::new(p, q, 2, p)
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        if self.q == 0 {
            return Err(ParamError::ZeroQ);
        }
        if self.discriminant() == BigInt::from(0) {
            return Err(ParamError::RepeatedRoot { p: self.p, q: self.q });
        }
        Ok(())
    }

    /// `D = p^2 + 4q`
    pub fn discriminant(&self) -> BigInt {
        BigInt::from(self.p) * self.p + BigInt::from(self.q) * 4
    }

    pub fn with_seeds(&self, a: i64, b: i64) -> Self {
        HoradamParams { a, b, ..*self }
    }

    pub fn as_fibonacci(&self) -> Self {
        self.with_seeds(0, 1)
    }

    pub fn as_lucas(&self) -> Self {
        self.with_seeds(2, self.p)
    }
}

impl fmt::Display for HoradamParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} q={} a={} b={}", self.p, self.q, self.a, self.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeqKind {
    Fib,
    Lucas,
    Horadam,
}

impl SeqKind {
    /// The parameter set whose seeds realize this kind.
    pub fn params(self, params: &HoradamParams) -> HoradamParams {
        match self {
            SeqKind::Fib => params.as_fibonacci(),
            SeqKind::Lucas => params.as_lucas(),
            SeqKind::Horadam => *params,
        }
    }
}

impl FromStr for SeqKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fib" => Ok(SeqKind::Fib),
            "lucas" => Ok(SeqKind::Lucas),
            "horadam" => Ok(SeqKind::Horadam),
            other => Err(format!("unknown sequence kind {other:?}")),
        }
    }
}

/// `J_n` by stepping the recurrence from the seeds, in either direction.
pub fn horadam(params: &HoradamParams, n: i64) -> Rational {
    if n >= 0 {
        let (mut x, mut y) = (BigInt::from(params.a), BigInt::from(params.b));
        for _ in 0..n {
            let next = &y * params.p + &x * params.q;
            x = std::mem::replace(&mut y, next);
        }
        Rational::from(x)
    } else {
        let (p, q) = (Rational::from(params.p), Rational::from(params.q));
        // (x, y) = (J_k, J_{k+1}), walking k downward.
        let (mut x, mut y) = (Rational::from(params.a), Rational::from(params.b));
        for _ in 0..n.unsigned_abs() {
            let prev = &(&y - &(&p * &x)) / &q;
            y = std::mem::replace(&mut x, prev);
        }
        x
    }
}

pub fn fib(params: &HoradamParams, n: i64) -> Rational {
    horadam(&params.as_fibonacci(), n)
}

pub fn lucas(params: &HoradamParams, n: i64) -> Rational {
    horadam(&params.as_lucas(), n)
}

pub fn scalar_seq(params: &HoradamParams, kind: SeqKind, n: i64) -> Rational {
    horadam(&kind.params(params), n)
}

#[derive(Clone)]
struct Mat2<R> {
    m: [[R; 2]; 2],
}

impl<R: CoeffRing> Mat2<R> {
    fn mul(&self, rhs: &Self) -> Self {
        let a = &self.m;
        let b = &rhs.m;
        let cell = |r: usize, c: usize| a[r][0].times(&b[0][c]).plus(&a[r][1].times(&b[1][c]));
        Mat2 { m: [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]] }
    }

    fn pow(&self, mut e: u64) -> Self {
        let z = self.m[0][0].zero_like();
        let o = z.one_like();
        let mut acc = Mat2 { m: [[o.clone(), z.clone()], [z, o]] };
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// `J_n` from the `n`-th power of the companion matrix `[[p, q], [1, 0]]`,
/// so `(J_{n+1}, J_n) = M^n (J_1, J_0)`. Negative `n` powers the inverse
/// `[[0, 1], [1/q, -p/q]]`.
pub fn horadam_fast(params: &HoradamParams, n: i64) -> Rational {
    if n >= 0 {
        let m = Mat2 {
            m: [[BigInt::from(params.p), BigInt::from(params.q)], [BigInt::from(1), BigInt::from(0)]],
        };
        let pw = m.pow(n as u64);
        Rational::from(&pw.m[1][0] * params.b + &pw.m[1][1] * params.a)
    } else {
        let q = Rational::from(params.q);
        let inv = Mat2 {
            m: [
                [Rational::zero(), Rational::one()],
                [&Rational::one() / &q, &Rational::from(-params.p) / &q],
            ],
        };
        let pw = inv.pow(n.unsigned_abs());
        &(&pw.m[1][0] * &Rational::from(params.b)) + &(&pw.m[1][1] * &Rational::from(params.a))
    }
}

/// `(X_n, X_{n+1}, X_{n+2}, X_{n+3})` for the selected scalar sequence.
pub fn hybrid_seq(params: &HoradamParams, kind: SeqKind, n: i64) -> HybridNumber<Rational> {
    let seq = kind.params(params);
    HybridNumber::new(
        horadam(&seq, n),
        horadam(&seq, n + 1),
        horadam(&seq, n + 2),
        horadam(&seq, n + 3),
    )
}

/// Memoized two-sided evaluation for one parameter set. Single owner; use
/// one cache per task when evaluating concurrently.
#[derive(Debug, Clone)]
pub struct SeqCache {
    params: HoradamParams,
    memo: BTreeMap<i64, Rational>,
}

impl SeqCache {
    pub fn new(params: HoradamParams) -> Self {
        let mut memo = BTreeMap::new();
        memo.insert(0, Rational::from(params.a));
        memo.insert(1, Rational::from(params.b));
        SeqCache { params, memo }
    }

    pub fn params(&self) -> &HoradamParams {
        &self.params
    }

    pub fn get(&mut self, n: i64) -> Rational {
        if let Some(v) = self.memo.get(&n) {
            return v.clone();
        }
        let p = Rational::from(self.params.p);
        let q = Rational::from(self.params.q);
        // The memo always holds one contiguous run of indices containing 0 and 1.
        let lo = *self.memo.keys().next().expect("seeded");
        let hi = *self.memo.keys().next_back().expect("seeded");
        if n > hi {
            for k in hi + 1..=n {
                let v = &(&p * &self.memo[&(k - 1)]) + &(&q * &self.memo[&(k - 2)]);
                self.memo.insert(k, v);
            }
        } else {
            for k in (n..lo).rev() {
                let v = &(&self.memo[&(k + 2)] - &(&p * &self.memo[&(k + 1)])) / &q;
                self.memo.insert(k, v);
            }
        }
        self.memo[&n].clone()
    }

    pub fn hybrid(&mut self, n: i64) -> HybridNumber<Rational> {
        HybridNumber::new(self.get(n), self.get(n + 1), self.get(n + 2), self.get(n + 3))
    }

    pub fn cached(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.memo.iter().map(|(k, v)| (*k, v))
    }
}

/// One exact check of a scalar identity at one index.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalarCheck {
    pub identity: &'static str,
    pub index: i64,
    pub lhs: Rational,
    pub rhs: Rational,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalarIdentityReport {
    pub params: HoradamParams,
    pub checks: Vec<ScalarCheck>,
}

impl ScalarIdentityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&ScalarCheck> {
        self.checks.iter().find(|c| !c.pass)
    }
}

fn check(identity: &'static str, index: i64, lhs: Rational, rhs: Rational) -> ScalarCheck {
    let pass = lhs == rhs;
    ScalarCheck { identity, index, lhs, rhs, pass }
}

/// For `r` in `0..=rmax`:
/// `F_{2r} = F_r L_r`, `(p^2 + 4q) F_r^2 = L_{2r} - 2(-q)^r`,
/// `F_{-r} = -(-q)^{-r} F_r` and `L_r = α^r + β^r`.
pub fn verify_scalar_identities(params: &HoradamParams, rmax: i64) -> ScalarIdentityReport {
    let (alpha, beta) = roots(params.p, params.q).expect("validated params");
    let d = Rational::from(params.discriminant());
    let minus_q = Rational::from(-params.q);
    let mut checks = Vec::new();
    for r in 0..=rmax {
        let fr = fib(params, r);
        let lr = lucas(params, r);
        checks.push(check("F_2r = F_r L_r", r, fib(params, 2 * r), &fr * &lr));
        checks.push(check(
            "(p^2+4q) F_r^2 = L_2r - 2(-q)^r",
            r,
            &d * &(&fr * &fr),
            &lucas(params, 2 * r) - &(&Rational::from(2) * &minus_q.pow(r).expect("q != 0")),
        ));
        checks.push(check(
            "F_-r = -(-q)^-r F_r",
            r,
            fib(params, -r),
            -(&minus_q.pow(-r).expect("q != 0") * &fr),
        ));
        let power_sum = &alpha.pow(r).expect("alpha invertible") + &beta.pow(r).expect("beta invertible");
        match power_sum.rational_part() {
            Ok(v) => checks.push(check("L_r = a^r + b^r", r, lr, v)),
            Err(_) => checks.push(ScalarCheck {
                identity: "L_r = a^r + b^r",
                index: r,
                lhs: lr,
                rhs: power_sum.x().clone(),
                pass: false,
            }),
        }
    }
    ScalarIdentityReport { params: *params, checks }
}

/// `α^n = F_n α + q F_{n-1}` for `n` in `1..=nmax`, compared in the extension ring.
/// Each check records the `s`-coefficients on the two sides; `pass` covers both
/// components.
pub fn verify_power_reduction(params: &HoradamParams, nmax: i64) -> ScalarIdentityReport {
    let (alpha, _) = roots(params.p, params.q).expect("validated params");
    let q = Rational::from(params.q);
    let mut checks = Vec::new();
    for n in 1..=nmax {
        let lhs = alpha.pow(n).expect("non-negative power");
        let rhs = &alpha.scale(&fib(params, n)) + &alpha.lift(&q * &fib(params, n - 1));
        checks.push(ScalarCheck {
            identity: "a^n = F_n a + q F_(n-1)",
            index: n,
            pass: lhs == rhs,
            lhs: lhs.y().clone(),
            rhs: rhs.y().clone(),
        });
    }
    ScalarIdentityReport { params: *params, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    /// Plain forward stepping over i128, independent of the library paths.
    fn forward_oracle(p: i128, q: i128, a: i128, b: i128, n: usize) -> i128 {
        let (mut x, mut y) = (a, b);
        for _ in 0..n {
            let next = p * y + q * x;
            x = y;
            y = next;
        }
        x
    }

    #[test]
    fn params_validation() {
        assert_eq!(HoradamParams::new(1, 0, 0, 1), Err(ParamError::ZeroQ));
        assert_eq!(HoradamParams::new(2, -1, 0, 1), Err(ParamError::RepeatedRoot { p: 2, q: -1 }));
        assert!(HoradamParams::new(1, -2, 0, 1).is_ok());
    }

    #[test]
    fn horadam_examples() {
        let f = HoradamParams::fibonacci(1, 1).unwrap();
        assert_eq!(horadam(&f, 10), Rational::from(forward_oracle(1, 1, 0, 1, 10) as i64));
        assert_eq!(horadam(&f, 10), Rational::from(55));
        let g = HoradamParams::new(3, -2, 7, -4).unwrap();
        assert_eq!(horadam(&g, 0), Rational::from(7));
        assert_eq!(horadam(&f, -1), Rational::one());
        let half = HoradamParams::fibonacci(1, 2).unwrap();
        assert_eq!(horadam(&half, -1), Rational::new(1, 2).unwrap());
    }

    #[test]
    fn fib_and_lucas_examples() {
        let p = HoradamParams::fibonacci(1, 1).unwrap();
        let f: Vec<_> = (0..8).map(|n| fib(&p, n)).collect();
        assert_eq!(f, ints(&[0, 1, 1, 2, 3, 5, 8, 13]));
        let l: Vec<_> = (0..4).map(|n| lucas(&p, n)).collect();
        assert_eq!(l, ints(&[2, 1, 3, 4]));
        for (pp, qq) in [(1, 1), (2, 1), (3, -1), (1, -2)] {
            let params = HoradamParams::fibonacci(pp, qq).unwrap();
            assert_eq!(lucas(&params, 1), Rational::from(pp));
        }
    }

    #[test]
    fn fast_path_examples() {
        let f = HoradamParams::fibonacci(1, 1).unwrap();
        assert_eq!(horadam_fast(&f, 40), Rational::from(102334155));
        assert_eq!(forward_oracle(1, 1, 0, 1, 40), 102334155);
        let g = HoradamParams::new(3, 2, 5, -9).unwrap();
        assert_eq!(horadam_fast(&g, 1), Rational::from(-9));
        let pell = HoradamParams::fibonacci(2, 1).unwrap();
        assert_eq!(horadam_fast(&pell, 8), Rational::from(408));
        assert_eq!(forward_oracle(2, 1, 0, 1, 8), 408);
    }

    #[test]
    fn fast_matches_linear_on_both_sides() {
        for params in [
            HoradamParams::new(1, 1, 0, 1).unwrap(),
            HoradamParams::new(3, -2, 2, 3).unwrap(),
            HoradamParams::new(2, 2, 1, 1).unwrap(),
        ] {
            for n in -8..=60 {
                assert_eq!(horadam_fast(&params, n), horadam(&params, n), "{params} n={n}");
            }
        }
    }

    #[test]
    fn hybrid_examples() {
        let p = HoradamParams::new(1, 1, 0, 1).unwrap();
        assert_eq!(hybrid_seq(&p, SeqKind::Fib, 0), HybridNumber::from_ints(0, 1, 1, 2));
        assert_eq!(hybrid_seq(&p, SeqKind::Fib, 1), HybridNumber::from_ints(1, 1, 2, 3));
        assert_eq!(hybrid_seq(&p, SeqKind::Lucas, 0), HybridNumber::from_ints(2, 1, 3, 4));
        let (pp, qq, a, b) = (3, -2, 5, 7);
        let g = HoradamParams::new(pp, qq, a, b).unwrap();
        assert_eq!(
            hybrid_seq(&g, SeqKind::Horadam, 0),
            HybridNumber::from_ints(a, b, pp * b + qq * a, (pp * pp + qq) * b + pp * qq * a)
        );
    }

    #[test]
    fn cache_agrees_with_direct_evaluation() {
        let params = HoradamParams::new(2, -3, 1, 4).unwrap();
        let mut cache = SeqCache::new(params);
        for n in [5, -3, 12, -7, 0, 1, 2] {
            assert_eq!(cache.get(n), horadam(&params, n));
        }
        assert_eq!(cache.hybrid(-5), hybrid_seq(&params, SeqKind::Horadam, -5));
        let p = Rational::from(params.p);
        let q = Rational::from(params.q);
        let values: Vec<_> = cache.cached().map(|(k, v)| (k, v.clone())).collect();
        for w in values.windows(3) {
            assert_eq!(w[2].1, &(&p * &w[1].1) + &(&q * &w[0].1));
        }
    }

    #[test]
    fn scalar_identity_examples() {
        let p = HoradamParams::fibonacci(1, 1).unwrap();
        assert_eq!(fib(&p, 6), &fib(&p, 3) * &lucas(&p, 3));
        assert_eq!(fib(&p, 6), Rational::from(8));
        let report = verify_scalar_identities(&p, 0);
        assert!(report.all_pass());
        assert_eq!(report.checks.len(), 4);
        let report = verify_scalar_identities(&HoradamParams::fibonacci(3, -1).unwrap(), 2);
        assert!(report.all_pass(), "{:?}", report.first_failure());
        assert!(verify_power_reduction(&p, 30).all_pass());
    }

    #[test]
    fn unit_q_keeps_negative_indices_integral() {
        for (pp, qq) in [(1, 1), (3, -1), (2, 1)] {
            let params = HoradamParams::new(pp, qq, 2, 3).unwrap();
            for n in -12..0 {
                assert!(horadam(&params, n).is_integer());
            }
        }
    }
}
