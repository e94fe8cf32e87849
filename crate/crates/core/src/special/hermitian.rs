use super::action::{eigenspace, form_gram, matrix_to_two_form, operator_matrix, two_form_to_matrix, Decomposition};
use crate::error::{Error, Result};
use crate::exterior::{InnerSpace, Multivector, Space};
use crate::linalg::{intersect, orthogonal_complement, Matrix};
use crate::rational::q;
use std::sync::OnceLock;

/// `(ℝ²ᵐ, g, J)` with `J² = −1` and `Jᵀ g J = g`.
#[derive(Debug)]
pub struct HermitianModel {
    space: Space,
    j: Matrix,
    j_inv: Matrix,
    split: OnceLock<Decomposition>,
}

impl Clone for HermitianModel {
    fn clone(&self) -> Self {
        HermitianModel { space: self.space.clone(), j: self.j.clone(), j_inv: self.j_inv.clone(), split: OnceLock::new() }
    }
}

impl HermitianModel {
    /// `J = [[0, −1], [1, 0]]` in m×m blocks, so `J e_k = e_{m+k}`.
    pub fn standard(m: usize) -> Self {
        let n = 2 * m;
        let mut j = Matrix::zeros(n, n);
        for k in 0..m {
            j[(m + k, k)] = q(1);
            j[(k, m + k)] = q(-1);
        }
        Self::new(&InnerSpace::standard(n), j).expect("standard complex structure")
    }

    pub fn new(space: &Space, j: Matrix) -> Result<Self> {
        let n = space.n();
        if n % 2 == 1 {
            return Err(Error::Dimension(format!("complex structures need even dimension, got {n}")));
        }
        if j.rows() != n || !j.is_square() {
            return Err(Error::Dimension("J has the wrong shape".into()));
        }
        if j.mul(&j) != Matrix::identity(n).scale(&q(-1)) {
            return Err(Error::InvalidInput("J² ≠ −1".into()));
        }
        if j.transpose().mul(space.metric()).mul(&j) != *space.metric() {
            return Err(Error::InvalidInput("J is not a g-isometry".into()));
        }
        let j_inv = j.scale(&q(-1));
        Ok(HermitianModel { space: space.clone(), j, j_inv, split: OnceLock::new() })
    }

    pub fn space(&self) -> &Space {
        &self.space
    }
    pub fn j(&self) -> &Matrix {
        &self.j
    }
    pub fn m(&self) -> usize {
        self.space.n() / 2
    }

    /// `σ(x, y) = g(Jx, y)`.
    pub fn sigma(&self) -> Multivector {
        matrix_to_two_form(&self.space, &self.j.transpose().mul(self.space.metric()))
    }

    /// `a ↦ a(J⁻¹·, J⁻¹·)`.
    pub fn act_on_two_form(&self, a: &Multivector) -> Multivector {
        let m = two_form_to_matrix(a);
        matrix_to_two_form(&self.space, &self.j_inv.transpose().mul(&m).mul(&self.j_inv))
    }

    pub fn decomposition(&self) -> &Decomposition {
        self.split.get_or_init(|| {
            let l = operator_matrix(&self.space, 2, |a| Ok(self.act_on_two_form(a))).expect("degree 2");
            let minus = eigenspace(&l, &q(-1));
            let plus = eigenspace(&l, &q(1));
            let sigma = vec![self.sigma().to_vector()];
            let len = sigma[0].len();
            let traceless = intersect(&plus, &orthogonal_complement(&sigma, &form_gram(&self.space, 2)), len);
            Decomposition::new(&self.space, 2, vec![("[[2,0]]".into(), minus), ("[1,1]_0".into(), traceless), ("R".into(), sigma)])
                .expect("J-eigenspaces span Λ²")
        })
    }

    /// `(part20, part11_0, part_sigma)`.
    pub fn two_form_split(&self, a: &Multivector) -> Result<(Multivector, Multivector, Multivector)> {
        if a.degree() != 2 {
            return Err(Error::Degree(format!("expected a 2-form, got degree {}", a.degree())));
        }
        let mut p = self.decomposition().project(&a.with_space(&self.space))?;
        let s = p.pop().expect("three parts");
        let t = p.pop().expect("three parts");
        Ok((p.pop().expect("three parts"), t, s))
    }
}
