use crate::error::{Error, Result};
use crate::exterior::{multi_indices, Tensor};
use crate::rational::{q, qf, Q};
use num::Zero;

/// `V ⊗ Λ²V = Λ³V ⊕ V ⊕ Y₂¹` components of a tensor skew in its last two slots.
#[derive(Clone, Debug, PartialEq)]
pub struct TorsionSplit {
    pub lambda3_part: Tensor,
    pub vector_part: Tensor,
    pub y21_part: Tensor,
}

impl TorsionSplit {
    pub fn parts(&self) -> [&Tensor; 3] {
        [&self.lambda3_part, &self.vector_part, &self.y21_part]
    }
    pub fn reassemble(&self) -> Tensor {
        self.lambda3_part.add(&self.vector_part).add(&self.y21_part)
    }
}

pub fn torsion_type_split(w: &Tensor) -> Result<TorsionSplit> {
    let n = w.n();
    if w.degree() != 3 {
        return Err(Error::Degree(format!("expected a 3-tensor, got degree {}", w.degree())));
    }
    if n < 2 {
        return Err(Error::Dimension("torsion split needs n ≥ 2".into()));
    }
    for i in multi_indices(n, 3) {
        if *w.get(&i) != -w.get(&[i[0], i[2], i[1]]).clone() {
            return Err(Error::InvalidInput(format!("w is not skew in its last two slots at {i:?}")));
        }
    }
    let third = qf(1, 3);
    let lambda3 = Tensor::from_fn(w.space(), 3, |i| {
        (w.get(&[i[0], i[1], i[2]]) + w.get(&[i[1], i[2], i[0]]) + w.get(&[i[2], i[0], i[1]])) * &third
    });
    let raised = w.raise(0);
    let v: Vec<Q> = (0..n).map(|k| (0..n).map(|l| raised.get(&[l, l, k]).clone()).sum()).collect();
    let g = w.space().metric();
    let c = q(1) / q(n as i64 - 1);
    let vector = Tensor::from_fn(w.space(), 3, |i| {
        let (a, b, k) = (i[0], i[1], i[2]);
        let mut s = Q::zero();
        if !g[(a, b)].is_zero() {
            s += &g[(a, b)] * &v[k];
        }
        if !g[(a, k)].is_zero() {
            s -= &g[(a, k)] * &v[b];
        }
        s * &c
    });
    let y21 = w.sub(&lambda3).sub(&vector);
    Ok(TorsionSplit { lambda3_part: lambda3, vector_part: vector, y21_part: y21 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::{InnerSpace, Multivector};

    #[test]
    fn alternating_input_is_fixed() {
        let s = InnerSpace::standard(3);
        let w = Tensor::from_multivector(&Multivector::basis(&s, &[1, 2, 3]));
        let t = torsion_type_split(&w).unwrap();
        assert_eq!(t.lambda3_part, w);
        assert!(t.vector_part.is_zero() && t.y21_part.is_zero());
    }

    #[test]
    fn surface_is_vectorial() {
        let s = InnerSpace::standard(2);
        let mut w = Tensor::zeros(&s, 3);
        w.set(&[0, 0, 1], q(3));
        w.set(&[0, 1, 0], q(-3));
        w.set(&[1, 0, 1], q(5));
        w.set(&[1, 1, 0], q(-5));
        let t = torsion_type_split(&w).unwrap();
        assert!(t.lambda3_part.is_zero() && t.y21_part.is_zero());
        assert_eq!(t.vector_part, w);
    }

    #[test]
    fn rejects_non_skew() {
        let s = InnerSpace::standard(3);
        let mut w = Tensor::zeros(&s, 3);
        w.set(&[0, 1, 2], q(1));
        assert!(torsion_type_split(&w).is_err());
    }
}
