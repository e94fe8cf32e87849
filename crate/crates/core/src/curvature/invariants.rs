use crate::error::{Error, Result};
use crate::exterior::{multi_indices, Tensor};
use crate::rational::Q;
use num::Zero;
use std::str::FromStr;

/// Spaces carrying the orthogonal-group quadratic invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvariantSpace {
    S2V,
    LambdaP(usize),
    VtensorLambda2,
    S2Lambda2,
}

impl InvariantSpace {
    pub fn tensor_degree(&self) -> usize {
        match self {
            InvariantSpace::S2V => 2,
            InvariantSpace::LambdaP(p) => *p,
            InvariantSpace::VtensorLambda2 => 3,
            InvariantSpace::S2Lambda2 => 4,
        }
    }

    pub fn min_dimension(&self) -> usize {
        match self {
            InvariantSpace::S2V => 2,
            InvariantSpace::LambdaP(p) => (*p).max(1),
            InvariantSpace::VtensorLambda2 => 3,
            InvariantSpace::S2Lambda2 => 4,
        }
    }
}

impl FromStr for InvariantSpace {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S2V" => Ok(InvariantSpace::S2V),
            "VtensorLambda2" => Ok(InvariantSpace::VtensorLambda2),
            "S2Lambda2" => Ok(InvariantSpace::S2Lambda2),
            _ => match s.strip_prefix("Lambda").and_then(|p| p.parse().ok()) {
                Some(p) if p >= 1 => Ok(InvariantSpace::LambdaP(p)),
                _ => Err(Error::InvalidInput(format!("unknown invariant space tag `{s}`"))),
            },
        }
    }
}

#[derive(Clone, Copy)]
pub struct QuadraticInvariant {
    pub name: &'static str,
    degree: usize,
    f: fn(&Tensor) -> Q,
}

impl std::fmt::Debug for QuadraticInvariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QuadraticInvariant({})", self.name)
    }
}

impl QuadraticInvariant {
    pub fn eval(&self, t: &Tensor) -> Result<Q> {
        if t.degree() != self.degree {
            return Err(Error::Degree(format!("{} expects a degree-{} tensor", self.name, self.degree)));
        }
        Ok((self.f)(t))
    }
}

fn sum_over<F: Fn(&[usize]) -> Q>(n: usize, d: usize, f: F) -> Q {
    let mut s = Q::zero();
    for i in multi_indices(n, d) {
        s += f(&i);
    }
    s
}

fn sq(t: &Tensor) -> Q {
    t.plain_dot(t)
}

fn s2v_p1(t: &Tensor) -> Q {
    let tr: Q = (0..t.n()).map(|i| t.get(&[i, i]).clone()).sum();
    &tr * &tr
}

fn vl_q2(t: &Tensor) -> Q {
    sum_over(t.n(), 3, |i| t.get(i) * t.get(&[i[1], i[0], i[2]]))
}

fn vl_q3(t: &Tensor) -> Q {
    (0..t.n())
        .map(|k| {
            let s: Q = (0..t.n()).map(|i| t.get(&[i, i, k]).clone()).sum();
            &s * &s
        })
        .sum()
}

fn sl_p2(t: &Tensor) -> Q {
    sum_over(t.n(), 4, |i| t.get(i) * t.get(&[i[0], i[2], i[1], i[3]]))
}

fn sl_p3(t: &Tensor) -> Q {
    let n = t.n();
    let mut s = Q::zero();
    for j in 0..n {
        for l in 0..n {
            let c: Q = (0..n).map(|i| t.get(&[i, j, i, l]).clone()).sum();
            s += &c * &c;
        }
    }
    s
}

fn sl_p4(t: &Tensor) -> Q {
    let s = sum_over(t.n(), 2, |i| t.get(&[i[0], i[1], i[0], i[1]]).clone());
    &s * &s
}

/// The independent elementary quadratic invariants on a tagged space.
pub fn quadratic_invariants(tag: InvariantSpace, n: usize) -> Result<Vec<QuadraticInvariant>> {
    if n < tag.min_dimension() {
        return Err(Error::Dimension(format!("{tag:?} needs n ≥ {}", tag.min_dimension())));
    }
    let d = tag.tensor_degree();
    let mk = |name, f| QuadraticInvariant { name, degree: d, f };
    Ok(match tag {
        InvariantSpace::S2V => vec![mk("P1", s2v_p1), mk("P2", sq)],
        InvariantSpace::LambdaP(_) => vec![mk("norm2", sq)],
        InvariantSpace::VtensorLambda2 => vec![mk("Q1", sq), mk("Q2", vl_q2), mk("Q3", vl_q3)],
        InvariantSpace::S2Lambda2 => vec![mk("P1", sq), mk("P2", sl_p2), mk("P3", sl_p3), mk("P4", sl_p4)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let c = |t, n| quadratic_invariants(t, n).unwrap().len();
        assert_eq!(c(InvariantSpace::S2V, 3), 2);
        assert_eq!(c(InvariantSpace::LambdaP(2), 4), 1);
        assert_eq!(c(InvariantSpace::VtensorLambda2, 4), 3);
        assert_eq!(c(InvariantSpace::S2Lambda2, 5), 4);
        assert!(quadratic_invariants(InvariantSpace::S2Lambda2, 3).is_err());
        assert!("Bogus".parse::<InvariantSpace>().is_err());
        assert_eq!("Lambda3".parse::<InvariantSpace>().unwrap(), InvariantSpace::LambdaP(3));
    }
}
