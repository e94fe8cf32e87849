use super::eigen::rational_eigenspaces;
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, Matrix, Vector};
use crate::rational::{q, Q};
use num::{ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Matrices of `K, U, V ∈ 𝔰𝔩(2,ℂ)` and `H, X, Y ∈ 𝔰𝔲(2)` on `V_n`,
/// basis `x₁ⁿ, x₁ⁿ⁻¹x₂, …, x₂ⁿ`.
#[derive(Clone, Debug)]
pub struct Su2Irrep {
    pub n: usize,
    pub k: Matrix,
    pub u: Matrix,
    pub v: Matrix,
}

/// `ρ(A)P = Σ_j ∂_jP · (xA)_j`, the derivative of `(gP)(x) = P(xg)`.
pub fn polynomial_action(n: usize, a: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(n + 1, n + 1);
    for k in 0..=n {
        let (p1, p2) = (q((n - k) as i64), q(k as i64));
        m[(k, k)] = &p1 * &a[(0, 0)] + &p2 * &a[(1, 1)];
        if k < n {
            m[(k + 1, k)] = &p1 * &a[(1, 0)];
        }
        if k > 0 {
            m[(k - 1, k)] = &p2 * &a[(0, 1)];
        }
    }
    m
}

pub fn su2_irrep_matrices(n: usize) -> Su2Irrep {
    let k = Matrix::from_i64(&[vec![1, 0], vec![0, -1]]);
    let u = Matrix::from_i64(&[vec![0, 1], vec![0, 0]]);
    let v = Matrix::from_i64(&[vec![0, 0], vec![1, 0]]);
    Su2Irrep { n, k: polynomial_action(n, &k), u: polynomial_action(n, &u), v: polynomial_action(n, &v) }
}

impl Su2Irrep {
    /// `H = iK`.
    pub fn h(&self) -> CMatrix {
        CMatrix::new(Matrix::zeros(self.n + 1, self.n + 1), self.k.clone())
    }
    /// `X = U − V`.
    pub fn x(&self) -> CMatrix {
        CMatrix::real(self.u.sub(&self.v))
    }
    /// `Y = i(U + V)`.
    pub fn y(&self) -> CMatrix {
        CMatrix::new(Matrix::zeros(self.n + 1, self.n + 1), self.u.add(&self.v))
    }

    /// `[K,U] = 2U`, `[K,V] = −2V`, `[U,V] = K`.
    pub fn satisfies_sl2_relations(&self) -> bool {
        self.k.commutator(&self.u) == self.u.scale(&q(2))
            && self.k.commutator(&self.v) == self.v.scale(&q(-2))
            && self.u.commutator(&self.v) == self.k
    }

    /// `[H,X] = 2Y`, `[X,Y] = 2H`, `[H,Y] = −2X`.
    pub fn satisfies_su2_relations(&self) -> bool {
        let two = crate::rational::CQ::from_int(2, 0);
        let (h, x, y) = (self.h(), self.x(), self.y());
        h.commutator(&x) == y.scale(&two)
            && x.commutator(&y) == h.scale(&two)
            && h.commutator(&y) == x.scale(&crate::rational::CQ::from_int(-2, 0))
    }

    pub fn weights(&self) -> Vec<i64> {
        (0..=self.n).map(|i| self.k[(i, i)].to_integer().to_i64().expect("small weight")).collect()
    }
}

/// Dimension of `{M : MA = AM for all A}`.
pub fn commutant_dim(mats: &[Matrix]) -> usize {
    let n = mats[0].rows();
    let id = Matrix::identity(n);
    let rows: Vec<Vector> = mats
        .iter()
        .flat_map(|a| {
            // row-major vec: vec(AM) = (A⊗I) vec M, vec(MA) = (I⊗Aᵀ) vec M
            let c = a.kron(&id).sub(&id.kron(&a.transpose()));
            (0..c.rows()).map(move |r| c.row(r)).collect::<Vec<_>>()
        })
        .collect();
    Matrix::from_rows(rows).nullspace().len()
}

/// `A ⊗ 1 + 1 ⊗ B`.
pub fn tensor_action(a: &Matrix, b: &Matrix) -> Matrix {
    a.kron(&Matrix::identity(b.rows())).add(&Matrix::identity(a.rows()).kron(b))
}

/// Joint weights of commuting torus matrices, each with its multiplicity.
pub fn weight_decompose(torus: &[Matrix]) -> Result<BTreeMap<Vec<Q>, usize>> {
    if torus.is_empty() {
        return Err(Error::InvalidInput("no torus matrices".into()));
    }
    let n = torus[0].rows();
    let mut last = None;
    for p in [7i64, 11, 13, 17, 19] {
        let mut m = Matrix::zeros(n, n);
        let mut c = Q::from_integer(1.into());
        for t in torus {
            m = m.add(&t.scale(&c));
            c *= q(p);
        }
        let spaces = match rational_eigenspaces(&m) {
            Ok(s) => s,
            Err(e) => return Err(e),
        };
        let mut out = BTreeMap::new();
        let mut ok = true;
        'outer: for (_, vs) in &spaces {
            let v0 = &vs[0];
            let k = v0.iter().position(|x| !x.is_zero()).expect("nonzero eigenvector");
            let w: Vec<Q> = torus.iter().map(|t| &t.mul_vec(v0)[k] / &v0[k]).collect();
            for v in vs {
                for (t, mu) in torus.iter().zip(&w) {
                    if t.mul_vec(v) != crate::linalg::vec_scale(v, mu) {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            *out.entry(w).or_insert(0) += vs.len();
        }
        if ok {
            return Ok(out);
        }
        last = Some(Error::NotDiagonalizable("generic element mixes weight spaces".into()));
    }
    Err(last.expect("tried at least once"))
}

/// Peels highest weights off an 𝔰𝔲(2) weight multiset.
pub fn su2_peel(weights: &BTreeMap<Vec<Q>, usize>) -> Result<Vec<usize>> {
    let mut mult: BTreeMap<i64, usize> = BTreeMap::new();
    for (w, m) in weights {
        if w.len() != 1 || !w[0].is_integer() {
            return Err(Error::InvalidInput("𝔰𝔲(2) weights are single integers".into()));
        }
        mult.insert(w[0].to_integer().to_i64().expect("small weight"), *m);
    }
    let mut out = Vec::new();
    while let Some((&top, _)) = mult.iter().next_back() {
        if top < 0 {
            return Err(Error::InvalidInput("weights are not symmetric".into()));
        }
        let mut w = top;
        while w >= -top {
            match mult.get_mut(&w) {
                Some(m) if *m > 0 => {
                    *m -= 1;
                    if *m == 0 {
                        mult.remove(&w);
                    }
                }
                _ => return Err(Error::InvalidInput(format!("weight {w} missing from the string of V_{top}"))),
            }
            w -= 2;
        }
        out.push(top as usize);
    }
    Ok(out)
}

/// `V_k ⊗ V_l = ⊕_{j=0}^{min(k,l)} V_{k+l−2j}`.
pub fn clebsch_gordan_su2(k: usize, l: usize) -> Vec<usize> {
    (0..=k.min(l)).map(|j| k + l - 2 * j).collect()
}

/// Decomposes `V_k ⊗ V_l` from explicit matrices.
pub fn su2_tensor_weights(k: usize, l: usize) -> Result<(BTreeMap<Vec<Q>, usize>, Vec<usize>)> {
    let kk = tensor_action(&su2_irrep_matrices(k).k, &su2_irrep_matrices(l).k);
    let w = weight_decompose(&[kk])?;
    let labels = su2_peel(&w)?;
    Ok((w, labels))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Plethysm {
    Tensor,
    Sym2,
    Alt2,
}

impl std::str::FromStr for Plethysm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tensor" => Ok(Plethysm::Tensor),
            "sym2" => Ok(Plethysm::Sym2),
            "alt2" => Ok(Plethysm::Alt2),
            _ => Err(Error::InvalidInput(format!("unknown plethysm `{s}`"))),
        }
    }
}

/// `dim H_d = 2d + 1`.
pub fn h_dim(d: usize) -> usize {
    2 * d + 1
}

/// Labels `d` of the `H_d` summands.
pub fn so3_plethysm(kind: Plethysm, m: usize, n: Option<usize>) -> Result<Vec<usize>> {
    match kind {
        Plethysm::Tensor => {
            let n = n.ok_or_else(|| Error::InvalidInput("tensor plethysm needs two labels".into()))?;
            if n > m {
                return Err(Error::InvalidInput(format!("expected m ≥ n, got m = {m}, n = {n}")));
            }
            Ok((m - n..=m + n).rev().collect())
        }
        Plethysm::Sym2 => Ok((0..=m).rev().map(|j| 2 * j).collect()),
        Plethysm::Alt2 => Ok((1..=m).rev().map(|j| 2 * j - 1).collect()),
    }
}

/// Expected total dimension for a plethysm.
pub fn plethysm_dimension(kind: Plethysm, m: usize, n: Option<usize>) -> usize {
    match kind {
        Plethysm::Tensor => h_dim(m) * h_dim(n.unwrap_or(0)),
        Plethysm::Sym2 => h_dim(m) * (m + 1),
        Plethysm::Alt2 => m * h_dim(m),
    }
}
