use super::space::{InnerSpace, Space};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::rational::{q, Q};
use num::{One, Zero};
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Sign of the permutation sorting a sequence of distinct entries.
pub fn permutation_sign(seq: &[usize]) -> i64 {
    let mut inv = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Increasing p-tuples of {1..n}, lexicographic.
pub fn basis_tuples(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            if n - i + 1 < p - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p <= n {
        rec(1, n, p, &mut Vec::new(), &mut out);
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn complement(n: usize, idx: &[usize]) -> Vec<usize> {
    (1..=n).filter(|i| !idx.contains(i)).collect()
}

/// Sparse alternating covariant tensor of fixed degree.
///
/// A basis term `e^{i1..ip}` evaluates to `det[e^{ia}(vb)]` on vectors, so
/// `e^{12}(e1, e2) = 1` and `e^1 ∧ e^2 = e^1 ⊗ e^2 − e^2 ⊗ e^1`.
#[derive(Clone, Debug)]
pub struct Multivector {
    space: Space,
    degree: usize,
    terms: BTreeMap<Vec<usize>, Q>,
}

impl PartialEq for Multivector {
    fn eq(&self, o: &Self) -> bool {
        InnerSpace::same(&self.space, &o.space) && self.degree == o.degree && self.terms == o.terms
    }
}

impl Multivector {
    pub fn zero(space: &Space, degree: usize) -> Self {
        assert!(degree <= space.n(), "degree {degree} exceeds dimension {}", space.n());
        Multivector { space: space.clone(), degree, terms: BTreeMap::new() }
    }

    pub fn scalar(space: &Space, c: Q) -> Self {
        let mut m = Multivector::zero(space, 0);
        m.push(Vec::new(), c);
        m
    }

    /// `e^{i1} ∧ … ∧ e^{ip}` for distinct 1-based indices in any order.
    pub fn basis(space: &Space, idx: &[usize]) -> Self {
        Self::term(space, idx, q(1))
    }

    pub fn term(space: &Space, idx: &[usize], c: Q) -> Self {
        let mut m = Multivector::zero(space, idx.len());
        if let Some((sorted, s)) = normalize(space.n(), idx) {
            m.push(sorted, c * q(s));
        }
        m
    }

    /// Builds from (index tuple, coefficient) pairs; tuples may be unsorted.
    pub fn from_terms<I: IntoIterator<Item = (Vec<usize>, Q)>>(space: &Space, degree: usize, it: I) -> Result<Self> {
        let mut m = Multivector::zero(space, degree);
        for (idx, c) in it {
            if idx.len() != degree {
                return Err(Error::Degree(format!("tuple {idx:?} has length {} not {degree}", idx.len())));
            }
            if idx.iter().any(|&i| i == 0 || i > space.n()) {
                return Err(Error::InvalidInput(format!("index out of range in {idx:?}")));
            }
            if let Some((sorted, s)) = normalize(space.n(), &idx) {
                m.push(sorted, c * q(s));
            }
        }
        Ok(m)
    }

    /// Integer-coefficient literal, e.g. `&[(&[1,2,3], 1), (&[2,5,7], -1)]`.
    pub fn from_int_terms(space: &Space, degree: usize, terms: &[(&[usize], i64)]) -> Self {
        Self::from_terms(space, degree, terms.iter().map(|(i, c)| (i.to_vec(), q(*c)))).expect("valid literal")
    }

    fn push(&mut self, idx: Vec<usize>, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }
    pub fn n(&self) -> usize {
        self.space.n()
    }
    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Q> {
        &self.terms
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn coeff(&self, idx: &[usize]) -> Q {
        match normalize(self.n(), idx) {
            Some((sorted, s)) => self.terms.get(&sorted).map_or_else(Q::zero, |c| c * q(s)),
            None => Q::zero(),
        }
    }

    /// Same coefficients on another space of the same dimension.
    pub fn with_space(&self, space: &Space) -> Self {
        assert_eq!(space.n(), self.n());
        Multivector { space: space.clone(), degree: self.degree, terms: self.terms.clone() }
    }

    fn check(&self, o: &Self) -> Result<()> {
        if !InnerSpace::same(&self.space, &o.space) {
            return Err(Error::SpaceMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        if self.degree != o.degree {
            return Err(Error::Degree(format!("cannot add degrees {} and {}", self.degree, o.degree)));
        }
        let mut m = self.clone();
        for (k, v) in &o.terms {
            m.push(k.clone(), v.clone());
        }
        Ok(m)
    }

    pub fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Multivector::zero(&self.space, self.degree);
        }
        let terms = self.terms.iter().map(|(k, v)| (k.clone(), v * s)).collect();
        Multivector { space: self.space.clone(), degree: self.degree, terms }
    }

    pub fn wedge(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let deg = self.degree + o.degree;
        if deg > self.n() {
            return Err(Error::Degree(format!("wedge degree {deg} exceeds dimension {}", self.n())));
        }
        let mut m = Multivector::zero(&self.space, deg);
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                if a.iter().any(|i| b.contains(i)) {
                    continue;
                }
                let mut cat = a.clone();
                cat.extend_from_slice(b);
                let s = permutation_sign(&cat);
                cat.sort_unstable();
                let c = ca * cb;
                m.push(cat, if s > 0 { c } else { -c });
            }
        }
        Ok(m)
    }

    /// `v ⌟ self`, inserting `v` into the first slot.
    pub fn interior(&self, v: &[Q]) -> Result<Self> {
        if self.degree == 0 {
            return Err(Error::Degree("interior product of a degree-0 form".into()));
        }
        if v.len() != self.n() {
            return Err(Error::Dimension(format!("vector has length {} not {}", v.len(), self.n())));
        }
        let mut m = Multivector::zero(&self.space, self.degree - 1);
        for (idx, c) in &self.terms {
            for (a, &i) in idx.iter().enumerate() {
                let vi = &v[i - 1];
                if vi.is_zero() {
                    continue;
                }
                let mut rest = idx.clone();
                rest.remove(a);
                let t = c * vi;
                m.push(rest, if a % 2 == 0 { t } else { -t });
            }
        }
        Ok(m)
    }

    /// `e_i ⌟ self` for a 1-based basis vector.
    pub fn interior_basis(&self, i: usize) -> Result<Self> {
        let mut v = vec![Q::zero(); self.n()];
        v[i - 1] = Q::one();
        self.interior(&v)
    }

    /// Value on `degree` vectors.
    pub fn eval(&self, vs: &[Vector]) -> Q {
        assert_eq!(vs.len(), self.degree);
        let p = self.degree;
        let mut s = Q::zero();
        for (idx, c) in &self.terms {
            let mut m = Matrix::zeros(p, p);
            for a in 0..p {
                for b in 0..p {
                    m[(a, b)] = vs[b][idx[a] - 1].clone();
                }
            }
            s += c * m.det();
        }
        s
    }

    /// Coefficient vector in the lexicographic basis of increasing tuples.
    pub fn to_vector(&self) -> Vector {
        basis_tuples(self.n(), self.degree).iter().map(|t| self.terms.get(t).cloned().unwrap_or_else(Q::zero)).collect()
    }

    pub fn from_vector(space: &Space, degree: usize, v: &[Q]) -> Self {
        let tuples = basis_tuples(space.n(), degree);
        assert_eq!(tuples.len(), v.len());
        let mut m = Multivector::zero(space, degree);
        for (t, c) in tuples.into_iter().zip(v) {
            m.push(t, c.clone());
        }
        m
    }

    /// Induced inner product on forms: Gram determinant of the covector metric.
    pub fn form_inner(&self, o: &Self) -> Result<Q> {
        self.check(o)?;
        if self.degree != o.degree {
            return Err(Error::Degree(format!("inner product of degrees {} and {}", self.degree, o.degree)));
        }
        if self.space.is_standard() {
            return Ok(self.terms.iter().filter_map(|(k, v)| o.terms.get(k).map(|w| v * w)).sum());
        }
        let mut s = Q::zero();
        for (i, a) in &self.terms {
            for (j, b) in &o.terms {
                s += a * b * basis_inner(&self.space, i, j);
            }
        }
        Ok(s)
    }

    pub fn norm2(&self) -> Q {
        self.form_inner(self).expect("same space")
    }

    /// Volume form `√det g · orientation · e^{1…n}`.
    pub fn volume(space: &Space) -> Result<Self> {
        let s = space.sqrt_det()?;
        let idx: Vec<usize> = (1..=space.n()).collect();
        Ok(Multivector::term(space, &idx, s * q(space.orientation() as i64)))
    }

    /// Left Hodge star: `⋆α ∧ β = ⟨α, β⟩ vol` for all β of the same degree as α.
    pub fn hodge_star(&self) -> Result<Self> {
        let n = self.n();
        let vol = self.space.sqrt_det()? * q(self.space.orientation() as i64);
        let mut m = Multivector::zero(&self.space, n - self.degree);
        let ks = if self.space.is_standard() { Vec::new() } else { basis_tuples(n, self.degree) };
        for (idx, c) in &self.terms {
            if self.space.is_standard() {
                let kc = complement(n, idx);
                let mut cat = kc.clone();
                cat.extend_from_slice(idx);
                m.push(kc, c * &vol * q(permutation_sign(&cat)));
            } else {
                for k in &ks {
                    let g = basis_inner(&self.space, idx, k);
                    if g.is_zero() {
                        continue;
                    }
                    let kc = complement(n, k);
                    let mut cat = kc.clone();
                    cat.extend_from_slice(k);
                    m.push(kc, c * &vol * g * q(permutation_sign(&cat)));
                }
            }
        }
        Ok(m)
    }

    /// `(plus, minus)` with `⋆plus = plus`, `⋆minus = −minus`; 2-forms on ℝ⁴ only.
    pub fn selfdual_split(&self) -> Result<(Self, Self)> {
        if self.n() != 4 || self.degree != 2 {
            return Err(Error::Dimension(format!(
                "self-dual split needs a 2-form on a 4-space, got degree {} on n = {}",
                self.degree,
                self.n()
            )));
        }
        let star = self.hodge_star()?;
        let half = Q::new(1.into(), 2.into());
        let plus = (self + &star).scale(&half);
        let minus = (self - &star).scale(&half);
        Ok((plus, minus))
    }

    /// Moves coefficients along a 1-based index map onto another space.
    pub fn relabel(&self, map: &[usize], target: &Space) -> Self {
        let mut m = Multivector::zero(target, self.degree);
        for (idx, c) in &self.terms {
            let new: Vec<usize> = idx.iter().map(|&i| map[i - 1]).collect();
            if let Some((sorted, s)) = normalize(target.n(), &new) {
                m.push(sorted, c * q(s));
            }
        }
        m
    }
}

/// Sorts distinct indices, returning the sign; `None` on repetition.
fn normalize(n: usize, idx: &[usize]) -> Option<(Vec<usize>, i64)> {
    assert!(idx.iter().all(|&i| i >= 1 && i <= n), "index out of range in {idx:?}");
    let mut sorted = idx.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sorted, permutation_sign(idx)))
}

fn basis_inner(space: &InnerSpace, i: &[usize], j: &[usize]) -> Q {
    let p = i.len();
    let g = space.inverse_metric();
    let mut m = Matrix::zeros(p, p);
    for a in 0..p {
        for b in 0..p {
            m[(a, b)] = g[(i[a] - 1, j[b] - 1)].clone();
        }
    }
    m.det()
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, o: &Multivector) -> Multivector {
        self.try_add(o).expect("incompatible multivectors")
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, o: &Multivector) -> Multivector {
        self.try_add(&-o).expect("incompatible multivectors")
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(&q(-1))
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, c) in &self.terms {
            let label: String = idx.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(if self.n() > 9 { "," } else { "" });
            let neg = c < &Q::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            let sign = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            let coef = if a.is_one() && !idx.is_empty() { String::new() } else { format!("{a}") };
            if idx.is_empty() {
                write!(f, "{sign}{coef}")?;
            } else {
                write!(f, "{sign}{coef}e{label}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    fn e(s: &Space, idx: &[usize]) -> Multivector {
        Multivector::basis(s, idx)
    }

    #[test]
    fn wedge_basics() {
        let s = InnerSpace::standard(4);
        assert_eq!(e(&s, &[1]).wedge(&e(&s, &[2])).unwrap(), e(&s, &[1, 2]));
        assert!(e(&s, &[1, 2]).wedge(&e(&s, &[1, 2])).unwrap().is_zero());
        assert_eq!(e(&s, &[2]).wedge(&e(&s, &[1])).unwrap().coeff(&[1, 2]), q(-1));
        assert_eq!(e(&s, &[2, 1]), e(&s, &[1, 2]).scale(&q(-1)));
        assert!(e(&s, &[1, 2]).wedge(&e(&s, &[3, 4])).unwrap().wedge(&e(&s, &[1])).is_err());
    }

    #[test]
    fn mismatched_spaces() {
        let a = InnerSpace::standard(3);
        let b = InnerSpace::new(Matrix::identity(3).scale(&q(4)), 1).unwrap();
        assert_eq!(e(&a, &[1]).wedge(&e(&b, &[2])), Err(Error::SpaceMismatch));
        let c = InnerSpace::standard(3);
        assert!(e(&a, &[1]).wedge(&e(&c, &[2])).is_ok());
    }

    #[test]
    fn interior_cases() {
        let s = InnerSpace::standard(3);
        let e1 = vec![q(1), q(0), q(0)];
        assert!(e(&s, &[2, 3]).interior(&e1).unwrap().is_zero());
        assert_eq!(e(&s, &[1, 2]).interior(&e1).unwrap(), e(&s, &[2]));
        assert_eq!(e(&s, &[2, 1]).interior(&e1).unwrap(), e(&s, &[2]).scale(&q(-1)));
        assert!(Multivector::scalar(&s, q(1)).interior(&e1).is_err());
    }

    #[test]
    fn evaluation_is_determinant() {
        let s = InnerSpace::standard(3);
        let e12 = e(&s, &[1, 2]);
        let u = vec![q(1), q(2), q(0)];
        let v = vec![q(3), q(4), q(5)];
        assert_eq!(e12.eval(&[u.clone(), v.clone()]), q(-2));
        let w = e12.interior(&u).unwrap();
        assert_eq!(w.eval(&[v]), q(-2));
    }

    #[test]
    fn inner_products() {
        let s = InnerSpace::standard(4);
        assert_eq!(e(&s, &[1, 2]).form_inner(&e(&s, &[1, 2])).unwrap(), q(1));
        assert_eq!(e(&s, &[1, 2]).form_inner(&e(&s, &[1, 3])).unwrap(), q(0));
        assert!(e(&s, &[1, 2]).form_inner(&e(&s, &[1])).is_err());
        let g = InnerSpace::new(Matrix::from_rows(vec![vec![q(2), q(0)], vec![q(0), qf(1, 2)]]), 1).unwrap();
        // covector metric is diag(1/2, 2)
        assert_eq!(e(&g, &[1]).norm2(), qf(1, 2));
        assert_eq!(e(&g, &[1, 2]).norm2(), q(1));
    }

    #[test]
    fn star_examples() {
        let s7 = InnerSpace::standard(7);
        assert_eq!(e(&s7, &[1, 2, 3]).hodge_star().unwrap(), e(&s7, &[4, 5, 6, 7]));
        let s4 = InnerSpace::standard(4);
        let f1 = &e(&s4, &[1, 2]) + &e(&s4, &[3, 4]);
        assert_eq!(f1.hodge_star().unwrap(), f1);
        let bad = InnerSpace::new(Matrix::identity(2).scale(&q(2)).add(&Matrix::from_i64(&[vec![0, 0], vec![0, 1]])), 1).unwrap();
        assert!(matches!(e(&bad, &[1]).hodge_star(), Err(Error::UnsupportedMetric(_))));
    }

    #[test]
    fn selfdual_examples() {
        let s = InnerSpace::standard(4);
        let half = qf(1, 2);
        let (p, m) = e(&s, &[1, 2]).selfdual_split().unwrap();
        assert_eq!(p, (&e(&s, &[1, 2]) + &e(&s, &[3, 4])).scale(&half));
        assert_eq!(m, (&e(&s, &[1, 2]) - &e(&s, &[3, 4])).scale(&half));
        let f2 = &e(&s, &[1, 3]) - &e(&s, &[2, 4]);
        let (p, m) = f2.selfdual_split().unwrap();
        assert_eq!(p, f2);
        assert!(m.is_zero());
        assert!(e(&InnerSpace::standard(5), &[1, 2]).selfdual_split().is_err());
    }

    #[test]
    fn tuples() {
        assert_eq!(basis_tuples(4, 2).len(), 6);
        assert_eq!(basis_tuples(8, 4).len(), 70);
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(basis_tuples(3, 0), vec![Vec::<usize>::new()]);
    }
}
