//! Seeded random exact test data: rationals, tensors and rational orthogonal matrices.

use crate::curvature::{bianchi_project, AlgebraicCurvatureTensor};
use crate::exterior::{basis_tuples, Multivector, Space, SymTensor2, Tensor};
use crate::linalg::{Matrix, Vector};
use crate::rational::{q, qf, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational with numerator in [-5, 5] and denominator in [1, 4].
pub fn small_q(r: &mut SampleRng) -> Q {
    qf(r.gen_range(-5..=5), r.gen_range(1..=4))
}

pub fn vector(r: &mut SampleRng, n: usize) -> Vector {
    (0..n).map(|_| small_q(r)).collect()
}

pub fn symmetric(r: &mut SampleRng, space: &Space) -> SymTensor2 {
    let n = space.n();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = small_q(r);
            m[(i, j)] = v.clone();
            m[(j, i)] = v;
        }
    }
    SymTensor2::new(space, m).expect("symmetric by construction")
}

pub fn form(r: &mut SampleRng, space: &Space, degree: usize) -> Multivector {
    let v: Vec<Q> = basis_tuples(space.n(), degree).iter().map(|_| small_q(r)).collect();
    Multivector::from_vector(space, degree, &v)
}

/// Random element of S²Λ²V built from a random symmetric matrix on Λ².
pub fn s2_lambda2(r: &mut SampleRng, space: &Space) -> Tensor {
    let pairs = basis_tuples(space.n(), 2);
    let k = pairs.len();
    let mut m = Matrix::zeros(k, k);
    for a in 0..k {
        for b in a..k {
            let v = small_q(r);
            m[(a, b)] = v.clone();
            m[(b, a)] = v;
        }
    }
    crate::curvature::tensor_from_lambda2_matrix(space, &m)
}

pub fn curvature(r: &mut SampleRng, space: &Space) -> AlgebraicCurvatureTensor {
    bianchi_project(&s2_lambda2(r, space)).expect("S²Λ² input").0
}

/// Random tensor skew in its last two slots.
pub fn v_lambda2(r: &mut SampleRng, space: &Space) -> Tensor {
    let n = space.n();
    let mut t = Tensor::zeros(space, 3);
    for i in 0..n {
        for j in 0..n {
            for k in j + 1..n {
                let v = small_q(r);
                t.set(&[i, k, j], -v.clone());
                t.set(&[i, j, k], v);
            }
        }
    }
    t
}

const TRIPLES: [(i64, i64, i64); 4] = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25)];

/// Exact orthogonal matrix: a signed permutation times rational plane rotations.
pub fn orthogonal(r: &mut SampleRng, n: usize) -> Matrix {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = r.gen_range(0..=i);
        perm.swap(i, j);
    }
    let mut m = Matrix::zeros(n, n);
    for (i, &p) in perm.iter().enumerate() {
        m[(i, p)] = if r.gen_bool(0.5) { q(1) } else { q(-1) };
    }
    if n >= 2 {
        for _ in 0..3 {
            let a = r.gen_range(0..n);
            let mut b = r.gen_range(0..n - 1);
            if b >= a {
                b += 1;
            }
            let (x, y, h) = TRIPLES[r.gen_range(0..TRIPLES.len())];
            let (c, s) = (qf(x, h), qf(y, h));
            let mut g = Matrix::identity(n);
            g[(a, a)] = c.clone();
            g[(b, b)] = c;
            g[(a, b)] = -s.clone();
            g[(b, a)] = s;
            m = m.mul(&g);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::{is_s2_lambda2, InnerSpace};

    #[test]
    fn orthogonal_is_orthogonal() {
        let mut r = rng(1);
        for n in 1..6 {
            let o = orthogonal(&mut r, n);
            assert_eq!(o.transpose().mul(&o), Matrix::identity(n));
        }
    }

    #[test]
    fn samples_have_symmetries() {
        let mut r = rng(2);
        let s = InnerSpace::standard(4);
        assert!(is_s2_lambda2(&s2_lambda2(&mut r, &s)));
        assert!(curvature(&mut r, &s).is_bianchi_clean());
    }
}
