use super::eigen::denominator_lcm;
use super::lie::{pair, LieAlgebraPresentation};
use crate::error::{Error, Result};
use crate::linalg::{vec_scale, vec_sub, Matrix, Vector};
use crate::rational::{q, surd_parts, Q};
use num::{Integer, One, Signed, ToPrimitive, Zero};
use std::collections::{BTreeSet, VecDeque};

/// Roots as values `(α(T₁), …, α(T_r))` on the declared torus basis.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSystem {
    /// Invariant form restricted to the torus basis.
    pub gram: Matrix,
    /// Its inverse: the pairing on 𝔱*.
    pub dual_gram: Matrix,
    pub roots: Vec<Vector>,
    pub positive: Vec<Vector>,
    pub simple: Vec<Vector>,
    pub fundamental_weights: Vec<Vector>,
    pub warnings: Vec<String>,
}

/// Reads roots off the rotation blocks of `ad` on a generic torus element.
pub fn roots_from_torus(l: &LieAlgebraPresentation) -> Result<RootSystem> {
    let torus = l.torus();
    let r = torus.len();
    if r == 0 {
        return Err(Error::InvalidInput("no torus declared".into()));
    }
    let form = l.invariant_form();
    let gram = Matrix::from_rows(torus.iter().map(|x| torus.iter().map(|y| pair(&form, x, y)).collect()).collect());
    let dual_gram = gram.inverse().ok_or_else(|| Error::InvalidInput("torus is degenerate for the invariant form".into()))?;
    let mut warnings = Vec::new();
    let centralizer = l.centralizer_dim();
    if centralizer != r {
        warnings.push(format!("torus is not maximal: its centralizer has dimension {centralizer}, not {r}"));
    }
    let ads: Vec<Matrix> = torus.iter().map(|t| l.ad(t)).collect();
    let mut last_err = None;
    for p in [7i64, 11, 13, 17, 19, 23, 29, 31] {
        match roots_for_weights(l.dim(), &ads, p, centralizer) {
            Ok(roots) => {
                let mut rs = RootSystem {
                    gram,
                    dual_gram,
                    roots,
                    positive: Vec::new(),
                    simple: Vec::new(),
                    fundamental_weights: Vec::new(),
                    warnings,
                };
                rs.roots.sort();
                rs.choose_positive(lexicographic_positive)?;
                return Ok(rs);
            }
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.expect("at least one attempt"))
}

fn roots_for_weights(dim: usize, ads: &[Matrix], p: i64, centralizer: usize) -> Result<Vec<Vector>> {
    let mut m = Matrix::zeros(dim, dim);
    let mut c = Q::one();
    for a in ads {
        m = m.add(&a.scale(&c));
        c *= q(p);
    }
    let d = denominator_lcm(&m);
    let m = m.scale(&Q::from_integer(d));
    let m2 = m.mul(&m);
    let bound: i64 = (0..dim)
        .map(|i| (0..dim).fold(Q::zero(), |s, j| s + m[(i, j)].abs()))
        .max()
        .unwrap_or_else(Q::zero)
        .ceil()
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::NotDiagonalizable("entries too large".into()))?;
    let mut found = centralizer;
    let mut roots = Vec::new();
    for s in 1..=bound {
        if found == dim {
            break;
        }
        let s2 = q(s * s);
        let ker = m2.add(&Matrix::identity(dim).scale(&s2)).nullspace();
        if ker.is_empty() {
            continue;
        }
        if ker.len() != 2 {
            return Err(Error::NotDiagonalizable(format!("rotation plane of dimension {} for the generic element", ker.len())));
        }
        found += 2;
        let v = &ker[0];
        let w = vec_scale(&m.mul_vec(v), &Q::new(One::one(), s.into()));
        // ad_{T_i} v = λ_i w
        let k = w.iter().position(|x| !x.is_zero()).expect("w ≠ 0");
        let lam: Vector = ads.iter().map(|a| &a.mul_vec(v)[k] / &w[k]).collect();
        if ads.iter().zip(&lam).any(|(a, l)| a.mul_vec(v) != vec_scale(&w, l)) {
            return Err(Error::NotDiagonalizable("torus elements do not share the rotation plane".into()));
        }
        let neg: Vector = lam.iter().map(|x| -x).collect();
        roots.push(lam);
        roots.push(neg);
    }
    if found != dim {
        return Err(Error::NotDiagonalizable(format!("rational rotation planes cover {found} of {dim} dimensions")));
    }
    Ok(roots)
}

/// First nonzero coordinate is positive.
pub fn lexicographic_positive(v: &[Q]) -> bool {
    v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive())
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    /// `(λ, μ)` on 𝔱*.
    pub fn inner(&self, a: &[Q], b: &[Q]) -> Q {
        pair(&self.dual_gram, a, b)
    }

    /// `⟨α, β⟩ = 2(α,β)/(α,α)`.
    pub fn cartan_integer(&self, a: &[Q], b: &[Q]) -> Q {
        q(2) * self.inner(a, b) / self.inner(a, a)
    }

    pub fn is_integral(&self) -> bool {
        self.roots.iter().all(|a| self.roots.iter().all(|b| self.cartan_integer(a, b).is_integer()))
    }

    /// Re-selects positive and simple roots and recomputes fundamental weights.
    pub fn choose_positive<F: Fn(&[Q]) -> bool>(&mut self, positive: F) -> Result<()> {
        self.positive = self.roots.iter().filter(|r| positive(r)).cloned().collect();
        if self.positive.len() * 2 != self.roots.len() {
            return Err(Error::InvalidInput("positive choice must pick one root of each ± pair".into()));
        }
        let set: BTreeSet<Vector> = self.positive.iter().cloned().collect();
        self.simple = self
            .positive
            .iter()
            .filter(|a| !self.positive.iter().any(|b| set.contains(&vec_sub(a, b))))
            .cloned()
            .collect();
        self.fundamental_weights = self.solve_fundamental()?;
        Ok(())
    }

    fn solve_fundamental(&self) -> Result<Vec<Vector>> {
        let r = self.rank();
        if self.simple.len() != r {
            return Err(Error::InvalidInput(format!("{} simple roots for rank {r}", self.simple.len())));
        }
        // rows: (G⁻¹ α_j)ᵀ ω = δ_ij (α_j,α_j)/2
        let a = Matrix::from_rows(self.simple.iter().map(|s| self.dual_gram.mul_vec(s)).collect());
        (0..r)
            .map(|i| {
                let rhs: Vector = (0..r)
                    .map(|j| if i == j { self.inner(&self.simple[j], &self.simple[j]) / q(2) } else { Q::zero() })
                    .collect();
                a.solve(&rhs).ok_or_else(|| Error::InvalidInput("simple roots are degenerate".into()))
            })
            .collect()
    }

    pub fn cartan_matrix(&self) -> Matrix {
        let s = &self.simple;
        Matrix::from_rows(s.iter().map(|a| s.iter().map(|b| self.cartan_integer(b, a)).collect()).collect())
    }

    pub fn is_dominant(&self, w: &[Q]) -> bool {
        self.simple.iter().all(|a| !self.inner(w, a).is_negative())
    }

    pub fn reflect(&self, alpha: &[Q], beta: &[Q]) -> Vector {
        vec_sub(beta, &vec_scale(alpha, &self.cartan_integer(alpha, beta)))
    }

    /// Order of the group generated by all root reflections.
    pub fn weyl_group_order(&self) -> Result<usize> {
        const GUARD: usize = 1_000_000;
        let r = self.rank();
        let gens: Vec<Matrix> = self
            .roots
            .iter()
            .map(|a| Matrix::from_columns(&(0..r).map(|i| self.reflect(a, &crate::linalg::unit(r, i))).collect::<Vec<_>>(), r))
            .collect();
        let id = Matrix::identity(r);
        let mut seen: BTreeSet<Vector> = BTreeSet::from([id.flatten()]);
        let mut queue = VecDeque::from([id]);
        while let Some(g) = queue.pop_front() {
            for s in &gens {
                let h = s.mul(&g);
                if seen.insert(h.flatten()) {
                    if seen.len() > GUARD {
                        return Err(Error::Unsupported("Weyl group exceeds 10⁶ elements".into()));
                    }
                    queue.push_back(h);
                }
            }
        }
        Ok(seen.len())
    }

    /// Whether every reflection permutes the root set.
    pub fn reflections_permute_roots(&self) -> bool {
        let set: BTreeSet<&Vector> = self.roots.iter().collect();
        self.roots.iter().all(|a| self.roots.iter().all(|b| set.contains(&self.reflect(a, b))))
    }

    /// Orthonormal display coordinates `v_i / √G_ii` as `(c, r)` with value `c√r`; needs a diagonal Gram.
    pub fn display(&self, v: &[Q]) -> Result<Vec<(Q, u64)>> {
        let r = self.rank();
        for i in 0..r {
            for j in 0..r {
                if i != j && !self.gram[(i, j)].is_zero() {
                    return Err(Error::Unsupported("display coordinates need an orthogonal torus basis".into()));
                }
            }
        }
        Ok((0..r)
            .map(|i| {
                let g = &self.gram[(i, i)];
                let (c, rad) = surd_parts(g);
                (&v[i] * c / g, rad)
            })
            .collect())
    }

    pub fn display_f64(&self, v: &[Q]) -> Result<Vec<f64>> {
        Ok(self.display(v)?.iter().map(|(c, r)| crate::rational::to_f64(c) * (*r as f64).sqrt()).collect())
    }

    pub fn display_string(&self, v: &[Q]) -> Result<String> {
        Ok(format!("({})", self.display(v)?.iter().map(|(c, r)| surd_string(c, *r)).collect::<Vec<_>>().join(", ")))
    }

    /// Squared lengths of the roots, deduplicated and sorted.
    pub fn root_lengths(&self) -> Vec<Q> {
        let s: BTreeSet<Q> = self.roots.iter().map(|a| self.inner(a, a)).collect();
        s.into_iter().collect()
    }
}

/// `c√r` written as `2√3/3`, `-√3`, `1`.
pub fn surd_string(c: &Q, r: u64) -> String {
    if c.is_zero() {
        return "0".into();
    }
    if r == 1 {
        return c.to_string();
    }
    let sign = if c.is_negative() { "-" } else { "" };
    let n = c.numer().abs();
    let d = c.denom();
    let head = if n.is_one() { format!("√{r}") } else { format!("{n}√{r}") };
    if d.is_one() {
        format!("{sign}{head}")
    } else {
        format!("{sign}{head}/{d}")
    }
}

/// Integer multiple with coprime entries.
pub(crate) fn primitive(v: &[Q]) -> Vector {
    let l = v.iter().fold(num::BigInt::one(), |a, x| a.lcm(x.denom()));
    let ints: Vec<num::BigInt> = v.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(num::BigInt::zero(), |a, x| a.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    ints.into_iter().map(|x| Q::from_integer(x / &g)).collect()
}

/// Gram–Schmidt under `form`, each result made primitive integral.
pub(crate) fn orthogonalize(vs: &[Vector], form: &Matrix) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::new();
    for v in vs {
        let mut w = v.clone();
        for u in &out {
            let c = pair(form, &w, u) / pair(form, u, u);
            w = vec_sub(&w, &vec_scale(u, &c));
        }
        out.push(primitive(&w));
    }
    out
}
