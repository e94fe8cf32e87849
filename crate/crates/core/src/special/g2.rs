use super::action::{act, eigenspace, operator_matrix, stabilizer_algebra, two_form_to_matrix, Ambient, Decomposition};
use crate::error::{Error, Result};
use crate::exterior::{InnerSpace, Multivector, Space};
use crate::linalg::{unit, Matrix, Vector};
use crate::rational::{q, rational_root, Q};
use num::{Signed, Zero};
use std::sync::OnceLock;

/// Which literal G2 form to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum G2Variant {
    /// `e123 + e145 + e167 + e246 − e257 − e347 − e356`.
    Frame,
    /// `dx123 − dx1(dx45 + dx67) − dx2(dx46 + dx75) − dx3(dx47 + dx56)`.
    Coordinate,
}

pub const FRAME_TERMS: [([usize; 3], i64); 7] = [
    ([1, 2, 3], 1),
    ([1, 4, 5], 1),
    ([1, 6, 7], 1),
    ([2, 4, 6], 1),
    ([2, 5, 7], -1),
    ([3, 4, 7], -1),
    ([3, 5, 6], -1),
];

/// Unsorted tuples exactly as the literal reads.
pub const COORDINATE_TERMS: [([usize; 3], i64); 7] = [
    ([1, 2, 3], 1),
    ([1, 4, 5], -1),
    ([1, 6, 7], -1),
    ([2, 4, 6], -1),
    ([2, 7, 5], -1),
    ([3, 4, 7], -1),
    ([3, 5, 6], -1),
];

/// `dx4567 − dx23(dx45 + dx67) − dx31(dx46 + dx75) − dx12(dx47 + dx56)`.
pub const COORDINATE_STAR_TERMS: [([usize; 4], i64); 7] = [
    ([4, 5, 6, 7], 1),
    ([2, 3, 4, 5], -1),
    ([2, 3, 6, 7], -1),
    ([3, 1, 4, 6], -1),
    ([3, 1, 7, 5], -1),
    ([1, 2, 4, 7], -1),
    ([1, 2, 5, 6], -1),
];

pub fn literal_3form(space: &Space, terms: &[([usize; 3], i64)]) -> Multivector {
    Multivector::from_terms(space, 3, terms.iter().map(|(i, c)| (i.to_vec(), q(*c)))).expect("valid literal")
}

pub fn literal_4form(space: &Space, terms: &[([usize; 4], i64)]) -> Multivector {
    Multivector::from_terms(space, 4, terms.iter().map(|(i, c)| (i.to_vec(), q(*c)))).expect("valid literal")
}

/// Outcome of reading a metric off a 3-form on ℝ⁷.
#[derive(Clone, Debug, PartialEq)]
pub enum G2Metric {
    Definite { metric: Matrix, orientation: i8 },
    /// det(B)^{1/9} is irrational; B is returned unnormalized.
    Unnormalized { b: Matrix, det: Q },
    NotDefinite { b: Matrix },
}

/// `B_ij vol₀ = (e_i⌟φ) ∧ (e_j⌟φ) ∧ φ / 6`, then `g = B / det(B)^{1/9}`.
pub fn metric_from_g2_form(phi: &Multivector) -> Result<G2Metric> {
    if phi.n() != 7 || phi.degree() != 3 {
        return Err(Error::Dimension("expected a 3-form on a 7-dimensional space".into()));
    }
    let contractions: Vec<Multivector> = (1..=7).map(|i| phi.interior_basis(i)).collect::<Result<_>>()?;
    let top: Vec<usize> = (1..=7).collect();
    let mut b = Matrix::zeros(7, 7);
    for i in 0..7 {
        for j in i..7 {
            let v = contractions[i].wedge(&contractions[j])?.wedge(phi)?.coeff(&top) / q(6);
            b[(i, j)] = v.clone();
            b[(j, i)] = v;
        }
    }
    let det = b.det();
    if det.is_zero() {
        return Ok(G2Metric::NotDefinite { b });
    }
    let Some(c) = rational_root(&det, 9) else {
        return Ok(G2Metric::Unnormalized { b, det });
    };
    let metric = b.scale(&c.recip());
    if !metric.is_positive_definite() {
        return Ok(G2Metric::NotDefinite { b });
    }
    Ok(G2Metric::Definite { metric, orientation: if c.is_positive() { 1 } else { -1 } })
}

/// A definite 3-form with its metric, orientation, star and module projectors.
#[derive(Debug)]
pub struct G2Structure {
    phi: Multivector,
    star_phi: Multivector,
    two: OnceLock<Decomposition>,
    three: OnceLock<Decomposition>,
}

impl Clone for G2Structure {
    fn clone(&self) -> Self {
        G2Structure { phi: self.phi.clone(), star_phi: self.star_phi.clone(), two: OnceLock::new(), three: OnceLock::new() }
    }
}

pub fn standard_g2_form(variant: G2Variant) -> G2Structure {
    let flat = InnerSpace::standard(7);
    let phi = match variant {
        G2Variant::Frame => literal_3form(&flat, &FRAME_TERMS),
        G2Variant::Coordinate => literal_3form(&flat, &COORDINATE_TERMS),
    };
    G2Structure::from_form(&phi).expect("literal G2 forms are definite")
}

impl G2Structure {
    /// Rebuilds the space from the metric and orientation that φ induces.
    pub fn from_form(phi: &Multivector) -> Result<Self> {
        match metric_from_g2_form(phi)? {
            G2Metric::Definite { metric, orientation } => {
                let space = if metric == Matrix::identity(7) {
                    InnerSpace::standard_oriented(7, orientation)
                } else {
                    InnerSpace::new(metric, orientation)?
                };
                let phi = phi.with_space(&space);
                let star_phi = phi.hodge_star()?;
                Ok(G2Structure { phi, star_phi, two: OnceLock::new(), three: OnceLock::new() })
            }
            G2Metric::Unnormalized { det, .. } => {
                Err(Error::Unsupported(format!("det B = {det} has no rational ninth root")))
            }
            G2Metric::NotDefinite { .. } => Err(Error::InvalidInput("3-form is not definite".into())),
        }
    }

    pub fn phi(&self) -> &Multivector {
        &self.phi
    }
    pub fn star_phi(&self) -> &Multivector {
        &self.star_phi
    }
    pub fn space(&self) -> &Space {
        self.phi.space()
    }
    pub fn metric(&self) -> &Matrix {
        self.space().metric()
    }
    pub fn orientation(&self) -> i8 {
        self.space().orientation()
    }

    /// `g(x × y, z) = φ(x, y, z)`.
    pub fn cross(&self, x: &[Q], y: &[Q]) -> Vector {
        let w = self.phi.interior(x).and_then(|a| a.interior(y)).expect("length-7 vectors");
        let c = w.to_vector();
        self.space().inverse_metric().mul_vec(&c)
    }

    /// `α ↦ ⋆(φ ∧ α)` on Λ².
    pub fn two_form_operator(&self) -> Matrix {
        operator_matrix(self.space(), 2, |a| self.phi.wedge(a)?.hodge_star()).expect("degrees fit")
    }

    pub fn two_form_decomposition(&self) -> &Decomposition {
        self.two.get_or_init(|| {
            let l = self.two_form_operator();
            Decomposition::new(
                self.space(),
                2,
                vec![("7".into(), eigenspace(&l, &q(2))), ("14".into(), eigenspace(&l, &q(-1)))],
            )
            .expect("eigenspaces of ⋆(φ∧·) span Λ²")
        })
    }

    pub fn three_form_decomposition(&self) -> &Decomposition {
        self.three.get_or_init(|| {
            let sp = self.space();
            let p1 = vec![self.phi.to_vector()];
            let p7: Vec<Vector> = (0..7)
                .map(|i| {
                    let a = Multivector::from_vector(sp, 1, &unit(7, i));
                    self.phi.wedge(&a).and_then(|x| x.hodge_star()).expect("degrees fit").to_vector()
                })
                .collect();
            let wedge_phi = operator_matrix(sp, 3, |a| a.wedge(&self.phi)).expect("degrees fit");
            let wedge_star = operator_matrix(sp, 3, |a| a.wedge(&self.star_phi)).expect("degrees fit");
            let mut rows: Vec<Vector> = (0..wedge_phi.rows()).map(|r| wedge_phi.row(r)).collect();
            rows.extend((0..wedge_star.rows()).map(|r| wedge_star.row(r)));
            let p27 = Matrix::from_rows(rows).nullspace();
            Decomposition::new(sp, 3, vec![("1".into(), p1), ("7".into(), p7), ("27".into(), p27)])
                .expect("Λ³ = 1 + 7 + 27")
        })
    }

    /// `(part7, part14)` with `⋆(φ∧part7) = 2 part7`, `⋆(φ∧part14) = −part14`.
    pub fn two_form_split(&self, a: &Multivector) -> Result<(Multivector, Multivector)> {
        let mut p = self.two_form_decomposition().project(&a.with_space(self.space()))?;
        let p14 = p.pop().expect("two parts");
        Ok((p.pop().expect("two parts"), p14))
    }

    /// `(part1, part7, part27)`.
    pub fn three_form_split(&self, c: &Multivector) -> Result<(Multivector, Multivector, Multivector)> {
        let mut p = self.three_form_decomposition().project(&c.with_space(self.space()))?;
        let p27 = p.pop().expect("three parts");
        let p7 = p.pop().expect("three parts");
        Ok((p.pop().expect("three parts"), p7, p27))
    }

    /// Basis of 𝔤₂ ⊂ 𝔰𝔬(7).
    pub fn stabilizer(&self) -> Vec<Matrix> {
        stabilizer_algebra(&self.phi, Ambient::So)
    }

    /// 2-form viewed in 𝔰𝔬(7) acting on φ.
    pub fn act_two_form(&self, a: &Multivector) -> Multivector {
        act(&two_form_to_matrix(a), &self.phi)
    }
}

/// Signed permutations `P` of ℝ⁷ with `P*φ_from = φ_to` (pullback by the coordinate map).
pub fn relating_signed_permutations(from: &Multivector, to: &Multivector) -> Vec<(Vec<usize>, Vec<i8>)> {
    use crate::exterior::permutation_sign;
    let src: Vec<([usize; 3], i64)> = from
        .terms()
        .iter()
        .map(|(k, c)| ([k[0] - 1, k[1] - 1, k[2] - 1], num::ToPrimitive::to_i64(c).unwrap_or(0)))
        .collect();
    let target: std::collections::BTreeMap<[usize; 3], i64> = to
        .terms()
        .iter()
        .map(|(k, c)| ([k[0] - 1, k[1] - 1, k[2] - 1], num::ToPrimitive::to_i64(c).unwrap_or(0)))
        .collect();
    let mut out = Vec::new();
    let perms = crate::exterior::permutations(7);
    for perm in &perms {
        for signs in 0u32..128 {
            let sign = |i: usize| if signs >> i & 1 == 1 { -1i64 } else { 1 };
            // e^i ↦ sign_i e^{perm[i]}
            let ok = src.iter().all(|(k, c)| {
                let img = [perm[k[0]], perm[k[1]], perm[k[2]]];
                let mut sorted = img;
                sorted.sort_unstable();
                let s = permutation_sign(&img) * sign(k[0]) * sign(k[1]) * sign(k[2]);
                target.get(&sorted) == Some(&(c * s))
            });
            if ok && src.len() == target.len() {
                out.push((perm.iter().map(|p| p + 1).collect(), (0..7).map(|i| sign(i) as i8).collect()));
            }
        }
    }
    out
}
