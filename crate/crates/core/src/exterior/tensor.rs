use super::multivector::{basis_tuples, permutation_sign, Multivector};
use super::space::{InnerSpace, Space};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{q, Q};
use num::Zero;

/// Symmetric bilinear form on V, e.g. g, Ric, h.
#[derive(Clone, Debug)]
pub struct SymTensor2 {
    space: Space,
    m: Matrix,
}

impl PartialEq for SymTensor2 {
    fn eq(&self, o: &Self) -> bool {
        InnerSpace::same(&self.space, &o.space) && self.m == o.m
    }
}

impl SymTensor2 {
    pub fn new(space: &Space, m: Matrix) -> Result<Self> {
        if m.rows() != space.n() || !m.is_square() {
            return Err(Error::Dimension(format!("expected {0}×{0} matrix", space.n())));
        }
        if !m.is_symmetric() {
            return Err(Error::InvalidInput("matrix is not symmetric".into()));
        }
        Ok(SymTensor2 { space: space.clone(), m })
    }

    pub fn metric(space: &Space) -> Self {
        SymTensor2 { space: space.clone(), m: space.metric().clone() }
    }

    pub fn zero(space: &Space) -> Self {
        SymTensor2 { space: space.clone(), m: Matrix::zeros(space.n(), space.n()) }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }
    pub fn matrix(&self) -> &Matrix {
        &self.m
    }
    pub fn at(&self, i: usize, j: usize) -> &Q {
        &self.m[(i, j)]
    }
    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    /// Metric trace `g^{ij} h_ij`.
    pub fn trace(&self) -> Q {
        if self.space.is_standard() {
            self.m.trace()
        } else {
            self.space.inverse_metric().mul(&self.m).trace()
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        SymTensor2 { space: self.space.clone(), m: self.m.add(&o.m) }
    }
    pub fn sub(&self, o: &Self) -> Self {
        SymTensor2 { space: self.space.clone(), m: self.m.sub(&o.m) }
    }
    pub fn scale(&self, s: &Q) -> Self {
        SymTensor2 { space: self.space.clone(), m: self.m.scale(s) }
    }

    pub fn eval(&self, x: &[Q], y: &[Q]) -> Q {
        self.m.bilinear(x, y)
    }

    pub fn to_tensor(&self) -> Tensor {
        let n = self.space.n();
        let mut t = Tensor::zeros(&self.space, 2);
        for i in 0..n {
            for j in 0..n {
                t.set(&[i, j], self.m[(i, j)].clone());
            }
        }
        t
    }
}

/// Dense covariant tensor indexed by 0-based d-tuples.
#[derive(Clone, Debug)]
pub struct Tensor {
    space: Space,
    degree: usize,
    data: Vec<Q>,
}

impl PartialEq for Tensor {
    fn eq(&self, o: &Self) -> bool {
        InnerSpace::same(&self.space, &o.space) && self.degree == o.degree && self.data == o.data
    }
}

impl Tensor {
    pub fn zeros(space: &Space, degree: usize) -> Self {
        let len = space.n().pow(degree as u32);
        Tensor { space: space.clone(), degree, data: vec![Q::zero(); len] }
    }

    pub fn from_fn<F: FnMut(&[usize]) -> Q>(space: &Space, degree: usize, mut f: F) -> Self {
        let mut t = Tensor::zeros(space, degree);
        for (k, idx) in multi_indices(space.n(), degree).enumerate() {
            t.data[k] = f(&idx);
        }
        t
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
    pub fn data(&self) -> &[Q] {
        &self.data
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.degree);
        idx.iter().fold(0, |acc, &i| acc * self.n() + i)
    }

    pub fn get(&self, idx: &[usize]) -> &Q {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Q) {
        let o = self.offset(idx);
        self.data[o] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn zip(&self, o: &Self, f: impl Fn(&Q, &Q) -> Q) -> Self {
        assert!(InnerSpace::same(&self.space, &o.space), "space mismatch");
        assert_eq!(self.degree, o.degree, "degree mismatch");
        let data = self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect();
        Tensor { space: self.space.clone(), degree: self.degree, data }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a + b)
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a - b)
    }
    pub fn scale(&self, s: &Q) -> Self {
        Tensor { space: self.space.clone(), degree: self.degree, data: self.data.iter().map(|a| a * s).collect() }
    }

    /// Plain coordinate pairing Σ a·b.
    pub fn plain_dot(&self, o: &Self) -> Q {
        self.data.iter().zip(&o.data).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum()
    }

    /// Tensor with slots permuted: `out[idx] = self[idx ∘ perm]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        Tensor::from_fn(&self.space, self.degree, |idx| {
            let src: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
            self.get(&src).clone()
        })
    }

    /// Raises one slot with the inverse metric.
    pub fn raise(&self, slot: usize) -> Self {
        if self.space.is_standard() {
            return self.clone();
        }
        let g = self.space.inverse_metric();
        let n = self.n();
        Tensor::from_fn(&self.space, self.degree, |idx| {
            let mut src = idx.to_vec();
            let mut s = Q::zero();
            for a in 0..n {
                src[slot] = a;
                let v = self.get(&src);
                if !v.is_zero() && !g[(idx[slot], a)].is_zero() {
                    s += &g[(idx[slot], a)] * v;
                }
            }
            s
        })
    }

    /// Full metric contraction ⟨self, o⟩ = self_{i..} o^{i..}.
    pub fn metric_dot(&self, o: &Self) -> Q {
        let mut r = o.clone();
        for k in 0..o.degree {
            r = r.raise(k);
        }
        self.plain_dot(&r)
    }

    /// Pullback `(A*T)(v1, …) = T(A v1, …)`.
    pub fn pullback(&self, a: &Matrix) -> Self {
        let n = self.n();
        let mut cur = self.clone();
        for slot in 0..self.degree {
            let prev = cur.clone();
            cur = Tensor::from_fn(&self.space, self.degree, |idx| {
                let mut src = idx.to_vec();
                let mut s = Q::zero();
                for b in 0..n {
                    if a[(b, idx[slot])].is_zero() {
                        continue;
                    }
                    src[slot] = b;
                    let v = prev.get(&src);
                    if !v.is_zero() {
                        s += v * &a[(b, idx[slot])];
                    }
                }
                s
            });
        }
        cur
    }

    /// Alternating dense tensor of a multivector: `T[σ(I)] = sgn(σ) c_I`.
    pub fn from_multivector(m: &Multivector) -> Self {
        let mut t = Tensor::zeros(m.space(), m.degree());
        for (idx, c) in m.terms() {
            for perm in permutations(m.degree()) {
                let img: Vec<usize> = perm.iter().map(|&p| idx[p] - 1).collect();
                t.set(&img, c * q(permutation_sign(&perm)));
            }
        }
        t
    }

    /// Reads increasing-index entries back as a multivector.
    pub fn to_multivector(&self) -> Multivector {
        let terms = basis_tuples(self.n(), self.degree).into_iter().filter_map(|t| {
            let z: Vec<usize> = t.iter().map(|i| i - 1).collect();
            let c = self.get(&z);
            (!c.is_zero()).then(|| (t, c.clone()))
        });
        Multivector::from_terms(&self.space, self.degree, terms).expect("valid tuples")
    }

    /// Evaluate on vectors.
    pub fn eval(&self, vs: &[Vec<Q>]) -> Q {
        let mut s = Q::zero();
        for idx in multi_indices(self.n(), self.degree) {
            let c = self.get(&idx);
            if c.is_zero() {
                continue;
            }
            let mut t = c.clone();
            for (k, &i) in idx.iter().enumerate() {
                t *= &vs[k][i];
                if t.is_zero() {
                    break;
                }
            }
            s += t;
        }
        s
    }
}

/// All d-tuples over 0..n in row-major order.
pub fn multi_indices(n: usize, d: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.pow(d as u32);
    (0..total).map(move |mut k| {
        let mut idx = vec![0; d];
        for slot in (0..d).rev() {
            idx[slot] = k % n;
            k /= n;
        }
        idx
    })
}

pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// `(r ⊘ s)(x,y,z,t) = r(x,z)s(y,t) + r(y,t)s(x,z) − r(x,t)s(y,z) − r(y,z)s(x,t)`.
pub fn kulkarni_nomizu(r: &SymTensor2, s: &SymTensor2) -> Result<Tensor> {
    if !InnerSpace::same(r.space(), s.space()) {
        return Err(Error::SpaceMismatch);
    }
    let (a, b) = (r.matrix(), s.matrix());
    Ok(Tensor::from_fn(r.space(), 4, |i| {
        let (x, y, z, t) = (i[0], i[1], i[2], i[3]);
        &a[(x, z)] * &b[(y, t)] + &a[(y, t)] * &b[(x, z)] - &a[(x, t)] * &b[(y, z)] - &a[(y, z)] * &b[(x, t)]
    }))
}

/// Antisymmetric in each pair and symmetric under pair swap.
pub fn is_s2_lambda2(t: &Tensor) -> bool {
    if t.degree() != 4 {
        return false;
    }
    multi_indices(t.n(), 4).all(|i| {
        let v = t.get(&i);
        let neg = -v.clone();
        *t.get(&[i[1], i[0], i[2], i[3]]) == neg
            && *t.get(&[i[0], i[1], i[3], i[2]]) == neg
            && t.get(&[i[2], i[3], i[0], i[1]]) == v
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kn_of_metric() {
        let s = InnerSpace::standard(4);
        let g = SymTensor2::metric(&s);
        let gg = kulkarni_nomizu(&g, &g).unwrap();
        assert_eq!(*gg.get(&[0, 1, 0, 1]), q(2));
        assert_eq!(*gg.get(&[0, 1, 1, 0]), q(-2));
        assert!(is_s2_lambda2(&gg));
    }

    #[test]
    fn multivector_round_trip() {
        let s = InnerSpace::standard(4);
        let m = &Multivector::basis(&s, &[1, 3]) + &Multivector::term(&s, &[2, 4], q(5));
        let t = Tensor::from_multivector(&m);
        assert_eq!(*t.get(&[2, 0]), q(-1));
        assert_eq!(t.to_multivector(), m);
    }

    #[test]
    fn multi_index_order() {
        let v: Vec<Vec<usize>> = multi_indices(2, 2).collect();
        assert_eq!(v, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(permutations(3).len(), 6);
    }
}
