use super::AlgebraicCurvatureTensor;
use crate::error::{Error, Result};
use crate::exterior::{basis_tuples, Multivector, Space, Tensor};
use crate::linalg::Matrix;
use crate::rational::{q, qf};

/// Matrix of an S²Λ² tensor on the basis e^{ij}, i<j (standard metric).
pub fn lambda2_matrix(t: &Tensor) -> Matrix {
    let pairs = basis_tuples(t.n(), 2);
    let mut m = Matrix::zeros(pairs.len(), pairs.len());
    for (a, p) in pairs.iter().enumerate() {
        for (b, r) in pairs.iter().enumerate() {
            m[(a, b)] = t.get(&[p[0] - 1, p[1] - 1, r[0] - 1, r[1] - 1]).clone();
        }
    }
    m
}

pub fn tensor_from_lambda2_matrix(space: &Space, m: &Matrix) -> Tensor {
    let pairs = basis_tuples(space.n(), 2);
    let pos = |i: usize, j: usize| -> Option<(usize, i64)> {
        if i == j {
            return None;
        }
        let (a, b, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
        pairs.iter().position(|p| p[0] == a + 1 && p[1] == b + 1).map(|k| (k, s))
    };
    Tensor::from_fn(space, 4, |i| match (pos(i[0], i[1]), pos(i[2], i[3])) {
        (Some((a, s)), Some((b, t))) => &m[(a, b)] * q(s * t),
        _ => q(0),
    })
}

/// Matrix of ⋆ on Λ² in the basis e^{ij}.
pub fn star_matrix(space: &Space) -> Result<Matrix> {
    let pairs = basis_tuples(space.n(), 2);
    let mut m = Matrix::zeros(pairs.len(), pairs.len());
    for (b, p) in pairs.iter().enumerate() {
        let v = Multivector::basis(space, p).hodge_star()?;
        if v.degree() != 2 {
            return Err(Error::Dimension("⋆ preserves Λ² only for n = 4".into()));
        }
        for (a, c) in v.to_vector().into_iter().enumerate() {
            m[(a, b)] = c;
        }
    }
    Ok(m)
}

/// SO(4) pieces of an S²Λ²ℝ⁴ tensor, each returned as a tensor.
#[derive(Clone, Debug, PartialEq)]
pub struct SingerThorpe {
    pub w_plus: Tensor,
    pub w_minus: Tensor,
    pub z_part: Tensor,
    /// `(tr(P₊𝓡)/3) P₊` and `(tr(P₋𝓡)/3) P₋`.
    pub scalar_pair: (Tensor, Tensor),
}

impl SingerThorpe {
    pub fn parts(&self) -> [&Tensor; 5] {
        [&self.scalar_pair.0, &self.scalar_pair.1, &self.z_part, &self.w_plus, &self.w_minus]
    }
    pub fn reassemble(&self) -> Tensor {
        let p = self.parts();
        p[1..].iter().fold(p[0].clone(), |acc, t| acc.add(t))
    }
}

pub fn singer_thorpe_split(r: &AlgebraicCurvatureTensor) -> Result<SingerThorpe> {
    let sp = r.space();
    if sp.n() != 4 {
        return Err(Error::Dimension(format!("Singer–Thorpe split needs n = 4, got {}", sp.n())));
    }
    if !sp.is_standard() {
        return Err(Error::Unsupported("Singer–Thorpe split is implemented for the standard metric".into()));
    }
    let m = lambda2_matrix(r.tensor());
    let s = star_matrix(sp)?;
    let id = Matrix::identity(6);
    let half = qf(1, 2);
    let pp = id.add(&s).scale(&half);
    let pm = id.sub(&s).scale(&half);
    let z = pp.mul(&m).mul(&pm).add(&pm.mul(&m).mul(&pp));
    let dp = pp.mul(&m).mul(&pp);
    let dm = pm.mul(&m).mul(&pm);
    let tp = pp.mul(&m).trace() * qf(1, 3);
    let tm = pm.mul(&m).trace() * qf(1, 3);
    let sp_plus = pp.scale(&tp);
    let sp_minus = pm.scale(&tm);
    let conv = |x: &Matrix| tensor_from_lambda2_matrix(sp, x);
    Ok(SingerThorpe {
        w_plus: conv(&dp.sub(&sp_plus)),
        w_minus: conv(&dm.sub(&sp_minus)),
        z_part: conv(&z),
        scalar_pair: (conv(&sp_plus), conv(&sp_minus)),
    })
}

/// Whether 𝓡 commutes with ⋆ on Λ²ℝ⁴.
pub fn commutes_with_star(r: &AlgebraicCurvatureTensor) -> Result<bool> {
    let m = lambda2_matrix(r.tensor());
    let s = star_matrix(r.space())?;
    Ok(m.commutator(&s).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::InnerSpace;

    #[test]
    fn matrix_round_trip() {
        let s = InnerSpace::standard(4);
        let r = AlgebraicCurvatureTensor::constant(&s, q(1));
        let m = lambda2_matrix(r.tensor());
        assert_eq!(m, Matrix::identity(6));
        assert_eq!(tensor_from_lambda2_matrix(&s, &m), *r.tensor());
        let st = star_matrix(&s).unwrap();
        assert_eq!(st.mul(&st), Matrix::identity(6));
    }

    #[test]
    fn constant_has_only_scalars() {
        let s = InnerSpace::standard(4);
        let r = AlgebraicCurvatureTensor::constant(&s, q(2));
        let st = singer_thorpe_split(&r).unwrap();
        assert!(st.w_plus.is_zero() && st.w_minus.is_zero() && st.z_part.is_zero());
        assert_eq!(st.reassemble(), *r.tensor());
        assert!(commutes_with_star(&r).unwrap());
    }
}
