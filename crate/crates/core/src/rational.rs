//! Scalar plumbing: exact rationals and exact complex rationals.

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational scalar, always reduced with positive denominator.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"`, `"-p/q"` and surrounding whitespace.
pub fn parse_q(s: &str) -> Result<Q> {
    let t = s.trim();
    let bad = || Error::InvalidInput(format!("not a rational: {s:?}"));
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(num, den))
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn int_nth_root(x: &BigInt, k: u32) -> Option<BigInt> {
    if x.is_negative() {
        if k % 2 == 0 {
            return None;
        }
        return int_nth_root(&-x, k).map(|r| -r);
    }
    let r = x.nth_root(k);
    if num::pow(r.clone(), k as usize) == *x {
        Some(r)
    } else {
        None
    }
}

/// Exact real k-th root when it is rational.
pub fn rational_root(x: &Q, k: u32) -> Option<Q> {
    let n = int_nth_root(x.numer(), k)?;
    let d = int_nth_root(x.denom(), k)?;
    Some(Q::new(n, d))
}

pub fn rational_sqrt(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    rational_root(x, 2)
}

/// Writes `x = c * sqrt(r)` with `r` a squarefree positive integer.
pub fn surd_parts(x: &Q) -> (Q, u64) {
    // sqrt(p/q) = sqrt(p q) / q
    let pq = (x.numer() * x.denom()).to_u64().expect("small radicand");
    let mut r = pq;
    let mut c: u64 = 1;
    let mut f = 2u64;
    while f * f <= r {
        while r % (f * f) == 0 {
            r /= f * f;
            c *= f;
        }
        f += 1;
    }
    (Q::new(BigInt::from(c), x.denom().clone()), r)
}

/// Complex number with exact rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CQ {
    pub re: Q,
    pub im: Q,
}

impl CQ {
    pub fn new(re: Q, im: Q) -> Self {
        CQ { re, im }
    }
    pub fn real(re: Q) -> Self {
        CQ { re, im: Q::zero() }
    }
    pub fn zero() -> Self {
        CQ::real(Q::zero())
    }
    pub fn one() -> Self {
        CQ::real(Q::one())
    }
    pub fn i() -> Self {
        CQ::new(Q::zero(), Q::one())
    }
    pub fn from_int(re: i64, im: i64) -> Self {
        CQ::new(q(re), q(im))
    }
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    pub fn conj(&self) -> Self {
        CQ::new(self.re.clone(), -self.im.clone())
    }
    pub fn scale(&self, s: &Q) -> Self {
        CQ::new(&self.re * s, &self.im * s)
    }
}

impl Add for &CQ {
    type Output = CQ;
    fn add(self, o: &CQ) -> CQ {
        CQ::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &CQ {
    type Output = CQ;
    fn sub(self, o: &CQ) -> CQ {
        CQ::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &CQ {
    type Output = CQ;
    fn mul(self, o: &CQ) -> CQ {
        CQ::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Neg for &CQ {
    type Output = CQ;
    fn neg(self) -> CQ {
        CQ::new(-self.re.clone(), -self.im.clone())
    }
}

impl fmt::Display for CQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{}-{}i", self.re, -self.im.clone())
                } else {
                    write!(f, "{}+{}i", self.re, self.im)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_reduce() {
        assert_eq!(parse_q("6/4").unwrap(), qf(3, 2));
        assert_eq!(parse_q(" -2 ").unwrap(), q(-2));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
        assert_eq!(qf(3, -6).to_string(), "-1/2");
    }

    #[test]
    fn roots() {
        assert_eq!(rational_root(&qf(-512, 27), 9), None);
        assert_eq!(rational_root(&q(-512), 9), Some(q(-2)));
        assert_eq!(rational_sqrt(&qf(9, 4)), Some(qf(3, 2)));
        assert_eq!(rational_sqrt(&q(3)), None);
        assert_eq!(surd_parts(&qf(1, 3)), (qf(1, 3), 3));
        assert_eq!(surd_parts(&q(12)), (q(2), 3));
    }

    #[test]
    fn complex_mul() {
        let a = CQ::from_int(1, 2);
        let b = CQ::from_int(3, -1);
        assert_eq!(&a * &b, CQ::from_int(5, 5));
        assert_eq!((&CQ::i() * &CQ::i()), CQ::from_int(-1, 0));
    }
}
