use crate::error::{Error, Result};
use crate::linalg::{dot, CMatrix, Matrix, Vector};
use crate::rational::{q, qf, CQ, Q};
use num::Zero;

/// A Lie algebra given by a basis and structure constants `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug)]
pub struct LieAlgebraPresentation {
    names: Vec<String>,
    c: Vec<Vec<Vector>>,
    realization: Option<Vec<CMatrix>>,
    torus: Vec<Vector>,
}

impl LieAlgebraPresentation {
    /// Expands every commutator in the span of `mats`.
    pub fn from_matrices(names: Vec<String>, mats: Vec<CMatrix>) -> Result<Self> {
        let dim = mats.len();
        if names.len() != dim {
            return Err(Error::InvalidInput("one name per basis matrix".into()));
        }
        let flat: Vec<Vector> = mats.iter().map(|m| m.flatten()).collect();
        let len = flat.first().map_or(0, |v| v.len());
        let b = Matrix::from_columns(&flat, len);
        if b.rank() != dim {
            return Err(Error::InvalidInput("basis matrices are linearly dependent".into()));
        }
        let mut c = vec![vec![vec![Q::zero(); dim]; dim]; dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let coeffs = b.solve(&mats[i].commutator(&mats[j]).flatten()).ok_or(Error::Closure(i, j))?;
                c[j][i] = coeffs.iter().map(|x| -x).collect();
                c[i][j] = coeffs;
            }
        }
        let l = LieAlgebraPresentation { names, c, realization: Some(mats), torus: Vec::new() };
        if !l.jacobi_holds() {
            return Err(Error::InvalidInput("Jacobi identity fails".into()));
        }
        Ok(l)
    }

    pub fn from_real_matrices(names: Vec<String>, mats: Vec<Matrix>) -> Result<Self> {
        Self::from_matrices(names, mats.into_iter().map(CMatrix::real).collect())
    }

    /// Declares the torus by coordinate vectors; they must commute pairwise.
    pub fn with_torus(mut self, torus: Vec<Vector>) -> Result<Self> {
        for (a, x) in torus.iter().enumerate() {
            if x.len() != self.dim() {
                return Err(Error::Dimension("torus element has the wrong length".into()));
            }
            for y in &torus[a + 1..] {
                if self.bracket(x, y).iter().any(|v| !v.is_zero()) {
                    return Err(Error::InvalidInput("torus elements do not commute".into()));
                }
            }
        }
        self.torus = torus;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.c.len()
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn torus(&self) -> &[Vector] {
        &self.torus
    }
    pub fn realization(&self) -> Option<&[CMatrix]> {
        self.realization.as_deref()
    }
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Q {
        &self.c[i][j][k]
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vector {
        let n = self.dim();
        let mut out = vec![Q::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let s = &x[i] * &y[j];
                for (o, ck) in out.iter_mut().zip(&self.c[i][j]) {
                    if !ck.is_zero() {
                        *o += &s * ck;
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        crate::linalg::unit(self.dim(), i)
    }

    /// Matrix of `ad_x` on the basis.
    pub fn ad(&self, x: &[Q]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.bracket(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(&cols, n)
    }

    pub fn jacobi_holds(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (a, b, c) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
                    let t1 = self.bracket(&self.bracket(&a, &b), &c);
                    let t2 = self.bracket(&self.bracket(&b, &c), &a);
                    let t3 = self.bracket(&self.bracket(&c, &a), &b);
                    if t1.iter().zip(&t2).zip(&t3).any(|((x, y), z)| !(x + y + z).is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Raw Killing form `Tr(ad_X ∘ ad_Y)`.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad(&self.basis_vector(i))).collect();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = ads[i].mul(&ads[j]).trace();
                k[(i, j)] = v.clone();
                k[(j, i)] = v;
            }
        }
        k
    }

    /// Rescaled form `(X, Y) = −Re Tr(XY)/2` on the matrix realization.
    pub fn trace_form(&self) -> Option<Matrix> {
        let mats = self.realization.as_ref()?;
        let n = mats.len();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = -mats[i].mul(&mats[j]).trace().re * qf(1, 2);
                k[(i, j)] = v.clone();
                k[(j, i)] = v;
            }
        }
        Some(k)
    }

    /// Positive-definite form used on the torus: the trace form if a realization exists, else −Killing.
    pub fn invariant_form(&self) -> Matrix {
        self.trace_form().unwrap_or_else(|| self.killing_form().scale(&q(-1)))
    }

    /// Checks `K([Z,X],Y) + K(X,[Z,Y]) = 0` for all basis triples.
    pub fn is_ad_invariant(&self, k: &Matrix) -> bool {
        let n = self.dim();
        for z in 0..n {
            let ad = self.ad(&self.basis_vector(z));
            // K(ad X, Y) + K(X, ad Y) = adᵀK + K ad
            if !ad.transpose().mul(k).add(&k.mul(&ad)).is_zero() {
                return false;
            }
        }
        true
    }

    /// Real combination of realization matrices.
    pub fn element_matrix(&self, x: &[Q]) -> Option<CMatrix> {
        let mats = self.realization.as_ref()?;
        let mut acc = CMatrix::zeros(mats[0].size());
        for (m, c) in mats.iter().zip(x) {
            if !c.is_zero() {
                acc = acc.add(&m.scale(&CQ::real(c.clone())));
            }
        }
        Some(acc)
    }

    /// Dimension of the centralizer of the torus.
    pub fn centralizer_dim(&self) -> usize {
        let rows: Vec<Vector> = self
            .torus
            .iter()
            .flat_map(|t| {
                let a = self.ad(t);
                (0..a.rows()).map(move |r| a.row(r)).collect::<Vec<_>>()
            })
            .collect();
        if rows.is_empty() {
            return self.dim();
        }
        Matrix::from_rows(rows).nullspace().len()
    }
}

/// Pairing of coordinate vectors under a symmetric matrix.
pub fn pair(g: &Matrix, x: &[Q], y: &[Q]) -> Q {
    dot(x, &g.mul_vec(y))
}
