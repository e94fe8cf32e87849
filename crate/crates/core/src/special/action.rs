use crate::error::{Error, Result};
use crate::exterior::{basis_tuples, Multivector, Space};
use crate::linalg::{span_rank, Matrix, Vector};
use crate::rational::{q, Q};
use num::Zero;

/// Infinitesimal action on forms: `(A·ω)(v₁,…) = −Σᵢ ω(…, A vᵢ, …)`.
pub fn act(a: &Matrix, w: &Multivector) -> Multivector {
    let n = w.n();
    assert_eq!(a.rows(), n);
    let mut out = Multivector::zero(w.space(), w.degree());
    for (idx, c) in w.terms() {
        for slot in 0..idx.len() {
            let i = idx[slot] - 1;
            for j in 0..n {
                let aij = &a[(i, j)];
                if aij.is_zero() {
                    continue;
                }
                let mut new = idx.clone();
                new[slot] = j + 1;
                out = &out + &Multivector::term(w.space(), &new, -(c * aij));
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ambient {
    /// Skew matrices.
    So,
    /// All matrices.
    Gl,
}

/// `E_ab = e_a e_bᵀ − e_b e_aᵀ` for a<b, matching the 2-form e^{ab}.
pub fn so_basis(n: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let mut m = Matrix::zeros(n, n);
            m[(a, b)] = q(1);
            m[(b, a)] = q(-1);
            out.push(m);
        }
    }
    out
}

pub fn gl_basis(n: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let mut m = Matrix::zeros(n, n);
            m[(a, b)] = q(1);
            out.push(m);
        }
    }
    out
}

/// Basis of `{A : A·form = 0}` inside the ambient algebra.
pub fn stabilizer_algebra(form: &Multivector, ambient: Ambient) -> Vec<Matrix> {
    let n = form.n();
    let basis = match ambient {
        Ambient::So => so_basis(n),
        Ambient::Gl => gl_basis(n),
    };
    let cols: Vec<Vector> = basis.iter().map(|b| act(b, form).to_vector()).collect();
    let rows = cols[0].len();
    let m = Matrix::from_columns(&cols, rows);
    m.nullspace()
        .into_iter()
        .map(|c| {
            let mut acc = Matrix::zeros(n, n);
            for (k, ck) in c.iter().enumerate() {
                if !ck.is_zero() {
                    acc = acc.add(&basis[k].scale(ck));
                }
            }
            acc
        })
        .collect()
}

/// Whether every commutator of basis elements stays in their span.
pub fn is_closed_under_commutator(basis: &[Matrix]) -> bool {
    let flat: Vec<Vector> = basis.iter().map(|m| m.flatten()).collect();
    let r = span_rank(&flat);
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let mut ext = flat.clone();
            ext.push(basis[i].commutator(&basis[j]).flatten());
            if span_rank(&ext) != r {
                return false;
            }
        }
    }
    true
}

/// Skew matrix with `A_ij = a_ij` for a 2-form `a`.
pub fn two_form_to_matrix(a: &Multivector) -> Matrix {
    assert_eq!(a.degree(), 2);
    let n = a.n();
    let mut m = Matrix::zeros(n, n);
    for (idx, c) in a.terms() {
        m[(idx[0] - 1, idx[1] - 1)] = c.clone();
        m[(idx[1] - 1, idx[0] - 1)] = -c.clone();
    }
    m
}

pub fn matrix_to_two_form(space: &Space, m: &Matrix) -> Multivector {
    let terms = basis_tuples(space.n(), 2).into_iter().map(|t| {
        let c = m[(t[0] - 1, t[1] - 1)].clone();
        (t, c)
    });
    Multivector::from_terms(space, 2, terms).expect("valid tuples")
}

/// Matrix of a linear map Λᵖ → Λ^q on lexicographic bases.
pub fn operator_matrix<F: Fn(&Multivector) -> Result<Multivector>>(space: &Space, p: usize, f: F) -> Result<Matrix> {
    let tuples = basis_tuples(space.n(), p);
    let mut cols = Vec::with_capacity(tuples.len());
    for t in &tuples {
        cols.push(f(&Multivector::basis(space, t))?.to_vector());
    }
    let rows = cols.first().map_or(0, |c| c.len());
    Ok(Matrix::from_columns(&cols, rows))
}

/// Gram matrix of `form_inner` on the lexicographic basis of Λᵖ.
pub fn form_gram(space: &Space, p: usize) -> Matrix {
    let tuples = basis_tuples(space.n(), p);
    let forms: Vec<Multivector> = tuples.iter().map(|t| Multivector::basis(space, t)).collect();
    let mut g = Matrix::zeros(forms.len(), forms.len());
    for i in 0..forms.len() {
        for j in i..forms.len() {
            let v = forms[i].form_inner(&forms[j]).expect("same space and degree");
            g[(i, j)] = v.clone();
            g[(j, i)] = v;
        }
    }
    g
}

/// Kernel of `L − λ`.
pub fn eigenspace(l: &Matrix, lambda: &Q) -> Vec<Vector> {
    l.sub(&Matrix::identity(l.rows()).scale(lambda)).nullspace()
}

/// Direct-sum decomposition of Λᵖ into named subspaces.
#[derive(Clone, Debug)]
pub struct Decomposition {
    space: Space,
    degree: usize,
    names: Vec<String>,
    bases: Vec<Vec<Vector>>,
    /// Inverse of the matrix whose columns are all basis vectors.
    coords: Matrix,
}

impl Decomposition {
    pub fn new(space: &Space, degree: usize, parts: Vec<(String, Vec<Vector>)>) -> Result<Self> {
        let dim = basis_tuples(space.n(), degree).len();
        let all: Vec<Vector> = parts.iter().flat_map(|(_, b)| b.clone()).collect();
        if all.len() != dim {
            return Err(Error::Dimension(format!("parts have total dimension {} not {dim}", all.len())));
        }
        let coords = Matrix::from_columns(&all, dim)
            .inverse()
            .ok_or_else(|| Error::Dimension("parts do not span the whole space".into()))?;
        let (names, bases) = parts.into_iter().unzip();
        Ok(Decomposition { space: space.clone(), degree, names, bases, coords })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(|b| b.len()).collect()
    }
    pub fn basis(&self, k: usize) -> &[Vector] {
        &self.bases[k]
    }
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn project(&self, w: &Multivector) -> Result<Vec<Multivector>> {
        if w.degree() != self.degree {
            return Err(Error::Degree(format!("expected degree {}, got {}", self.degree, w.degree())));
        }
        if w.n() != self.space.n() {
            return Err(Error::SpaceMismatch);
        }
        let c = self.coords.mul_vec(&w.to_vector());
        let dim = c.len();
        let mut out = Vec::new();
        let mut off = 0;
        for b in &self.bases {
            let mut v = vec![Q::zero(); dim];
            for (k, bv) in b.iter().enumerate() {
                let ck = &c[off + k];
                if ck.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(bv) {
                    *x += ck * y;
                }
            }
            off += b.len();
            out.push(Multivector::from_vector(w.space(), self.degree, &v));
        }
        Ok(out)
    }

    /// Row like `1 + 7 + 27 = 35`.
    pub fn dimension_row(&self) -> String {
        let d = self.dims();
        format!("{} = {}", d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" + "), d.iter().sum::<usize>())
    }
}
