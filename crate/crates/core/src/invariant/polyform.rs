use crate::error::{Error, Result};
use crate::exterior::{permutation_sign, InnerSpace, Multivector};
use crate::rational::{q, Q};
use num::{One, Zero};
use std::collections::BTreeMap;

/// Polynomial in `x₁ … x_N` with rational coefficients, keyed by exponent vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Vec<u32>, Q>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }
    pub fn constant(n: usize, c: Q) -> Self {
        let mut p = Poly::zero();
        p.push(vec![0; n], c);
        p
    }
    /// The coordinate `x_{i+1}` (0-based `i`).
    pub fn coordinate(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        let mut p = Poly::zero();
        p.push(e, Q::one());
        p
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn push(&mut self, e: Vec<u32>, c: Q) {
        if c.is_zero() {
            return;
        }
        let vanished = {
            let slot = self.terms.entry(e.clone()).or_insert_with(Q::zero);
            *slot += c;
            slot.is_zero()
        };
        if vanished {
            self.terms.remove(&e);
        }
    }
    pub fn add(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.push(e.clone(), c.clone());
        }
        r
    }
    pub fn scale(&self, s: &Q) -> Poly {
        let mut r = Poly::zero();
        for (e, c) in &self.terms {
            r.push(e.clone(), c * s);
        }
        r
    }
    pub fn mul(&self, o: &Poly) -> Poly {
        let mut r = Poly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                r.push(ea.iter().zip(eb).map(|(a, b)| a + b).collect(), ca * cb);
            }
        }
        r
    }
    pub fn partial(&self, i: usize) -> Poly {
        let mut r = Poly::zero();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                r.push(f, c * q(e[i] as i64));
            }
        }
        r
    }
    pub fn eval(&self, x: &[Q]) -> Q {
        self.terms
            .iter()
            .map(|(e, c)| e.iter().zip(x).fold(c.clone(), |acc, (&k, xi)| acc * num::pow(xi.clone(), k as usize)))
            .fold(Q::zero(), |a, b| a + b)
    }
}

/// Differential form on ℝᴺ with polynomial coefficients; keys are 1-based increasing tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyForm {
    n: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, Poly>,
}

impl PolyForm {
    pub fn zero(n: usize, degree: usize) -> Self {
        PolyForm { n, degree, terms: BTreeMap::new() }
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn push(&mut self, idx: Vec<usize>, p: Poly) {
        if p.is_zero() {
            return;
        }
        let merged = self.terms.get(&idx).map(|old| old.add(&p)).unwrap_or(p);
        if merged.is_zero() {
            self.terms.remove(&idx);
        } else {
            self.terms.insert(idx, merged);
        }
    }

    /// Constant-coefficient form from a multivector on the standard space.
    pub fn constant(m: &Multivector) -> Self {
        let n = m.n();
        let mut f = PolyForm::zero(n, m.degree());
        for (idx, c) in m.terms() {
            f.push(idx.clone(), Poly::constant(n, c.clone()));
        }
        f
    }

    pub fn add(&self, o: &PolyForm) -> Result<PolyForm> {
        self.compatible(o)?;
        let mut r = self.clone();
        for (i, p) in &o.terms {
            r.push(i.clone(), p.clone());
        }
        Ok(r)
    }

    pub fn sub(&self, o: &PolyForm) -> Result<PolyForm> {
        self.add(&o.scale(&q(-1)))
    }

    pub fn scale(&self, s: &Q) -> PolyForm {
        let mut r = PolyForm::zero(self.n, self.degree);
        for (i, p) in &self.terms {
            r.push(i.clone(), p.scale(s));
        }
        r
    }

    fn compatible(&self, o: &PolyForm) -> Result<()> {
        if self.n != o.n || self.degree != o.degree {
            return Err(Error::Degree(format!("({}, {}) vs ({}, {})", self.n, self.degree, o.n, o.degree)));
        }
        Ok(())
    }

    pub fn wedge(&self, o: &PolyForm) -> Result<PolyForm> {
        if self.n != o.n {
            return Err(Error::Dimension(format!("{} vs {}", self.n, o.n)));
        }
        let mut r = PolyForm::zero(self.n, self.degree + o.degree);
        for (a, pa) in &self.terms {
            for (b, pb) in &o.terms {
                if a.iter().any(|i| b.contains(i)) {
                    continue;
                }
                let mut seq = a.clone();
                seq.extend(b);
                let s = permutation_sign(&seq);
                seq.sort_unstable();
                r.push(seq, pa.mul(pb).scale(&q(s)));
            }
        }
        Ok(r)
    }

    /// `d(f dx^I) = Σ_k ∂_k f dx^k ∧ dx^I`.
    pub fn d(&self) -> PolyForm {
        let mut r = PolyForm::zero(self.n, self.degree + 1);
        for (idx, p) in &self.terms {
            for k in 0..self.n {
                let dp = p.partial(k);
                if dp.is_zero() || idx.contains(&(k + 1)) {
                    continue;
                }
                let mut seq = vec![k + 1];
                seq.extend(idx);
                let s = permutation_sign(&seq);
                seq.sort_unstable();
                r.push(seq, dp.scale(&q(s)));
            }
        }
        r
    }

    /// Contraction with the vector field `Σ v_k ∂_k`.
    pub fn interior(&self, v: &[Poly]) -> Result<PolyForm> {
        if v.len() != self.n || self.degree == 0 {
            return Err(Error::Degree("interior needs an N-component field and degree ≥ 1".into()));
        }
        let mut r = PolyForm::zero(self.n, self.degree - 1);
        for (idx, p) in &self.terms {
            for (pos, &k) in idx.iter().enumerate() {
                let mut rest = idx.clone();
                rest.remove(pos);
                let s = if pos % 2 == 0 { Q::one() } else { -Q::one() };
                r.push(rest, p.mul(&v[k - 1]).scale(&s));
            }
        }
        Ok(r)
    }

    /// The radial field `N = Σ x^k ∂_k`.
    pub fn position_field(n: usize) -> Vec<Poly> {
        (0..n).map(|i| Poly::coordinate(n, i)).collect()
    }

    pub fn eval_at(&self, x: &[Q]) -> Multivector {
        let space = InnerSpace::standard(self.n);
        Multivector::from_terms(&space, self.degree, self.terms.iter().map(|(i, p)| (i.clone(), p.eval(x))))
            .expect("valid tuples")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::InnerSpace as Space;

    #[test]
    fn d_squared_and_euler() {
        let s = Space::standard(4);
        let w = Multivector::from_int_terms(&s, 2, &[(&[1, 2], 1), (&[3, 4], 2)]);
        let f = PolyForm::constant(&w).interior(&PolyForm::position_field(4)).unwrap();
        assert!(f.d().d().is_zero());
        assert_eq!(f.d(), PolyForm::constant(&w).scale(&q(2)));
    }
}
