use super::action::{act, eigenspace, form_gram, operator_matrix, stabilizer_algebra, two_form_to_matrix, Ambient, Decomposition};
use super::g2::G2Structure;
use crate::error::{Error, Result};
use crate::exterior::{InnerSpace, Multivector, Space};
use crate::linalg::{orthogonal_complement, unit, Matrix, Vector};
use crate::rational::q;
use std::sync::OnceLock;

/// Storage slot of the 8th coordinate e⁰; e¹…e⁷ shift up by one.
pub const SLOT_OF_ZERO: usize = 1;

/// Slot of index `i ∈ 0..=7` in the 8-dimensional space.
pub fn slot(i: usize) -> usize {
    assert!(i <= 7);
    i + SLOT_OF_ZERO
}

/// Relabel map taking e¹…e⁷ of ℝ⁷ into ℝ⁸.
pub fn seven_to_eight() -> Vec<usize> {
    (1..=7).map(slot).collect()
}

#[derive(Debug)]
pub struct Spin7Structure {
    phi: Multivector,
    built_from: Option<G2Structure>,
    splits: [OnceLock<Decomposition>; 3],
}

impl Clone for Spin7Structure {
    fn clone(&self) -> Self {
        Spin7Structure { phi: self.phi.clone(), built_from: self.built_from.clone(), splits: Default::default() }
    }
}

/// `Φ = e⁰ ∧ φ + ⋆φ`.
pub fn spin7_from_g2(g: &G2Structure) -> Result<Spin7Structure> {
    if !g.space().is_standard() {
        return Err(Error::Unsupported("Spin(7) extension needs the standard metric on ℝ⁷".into()));
    }
    let v8 = InnerSpace::standard_oriented(8, g.orientation());
    let map = seven_to_eight();
    let e0 = Multivector::basis(&v8, &[slot(0)]);
    let phi = &e0.wedge(&g.phi().relabel(&map, &v8))? + &g.star_phi().relabel(&map, &v8);
    Ok(Spin7Structure { phi, built_from: Some(g.clone()), splits: Default::default() })
}

impl Spin7Structure {
    /// Wraps a 4-form on ℝ⁸ that is self-dual with `Φ∧Φ = 14 vol`.
    pub fn new(phi: &Multivector) -> Result<Self> {
        if phi.n() != 8 || phi.degree() != 4 {
            return Err(Error::Dimension("expected a 4-form on an 8-dimensional space".into()));
        }
        let vol = Multivector::volume(phi.space())?;
        if phi.wedge(phi)? != vol.scale(&q(14)) || phi.hodge_star()? != *phi {
            return Err(Error::InvalidInput("4-form is not an admissible Spin(7) form".into()));
        }
        Ok(Spin7Structure { phi: phi.clone(), built_from: None, splits: Default::default() })
    }

    pub fn phi(&self) -> &Multivector {
        &self.phi
    }
    pub fn space(&self) -> &Space {
        self.phi.space()
    }
    pub fn metric(&self) -> &Matrix {
        self.space().metric()
    }
    pub fn built_from(&self) -> Option<&G2Structure> {
        self.built_from.as_ref()
    }

    /// `α = e⁰¹ + e²³ + e⁴⁵ + e⁶⁷` in 0-based labels.
    pub fn alpha(&self) -> Multivector {
        let s = self.space();
        let mut a = Multivector::zero(s, 2);
        for k in [0, 2, 4, 6] {
            a = &a + &Multivector::basis(s, &[slot(k), slot(k + 1)]);
        }
        a
    }

    /// Real part of `(e⁰+ie¹)∧(e²+ie³)∧(e⁴+ie⁵)∧(e⁶+ie⁷)`.
    pub fn re_beta(&self) -> Multivector {
        let s = self.space();
        let mut out = Multivector::zero(s, 4);
        for mask in 0u32..16 {
            let k = mask.count_ones();
            if k % 2 == 1 {
                continue;
            }
            let idx: Vec<usize> = (0..4).map(|f| slot(2 * f + (mask >> f & 1) as usize)).collect();
            let sign = if k % 4 == 0 { 1 } else { -1 };
            out = &out + &Multivector::term(s, &idx, q(sign));
        }
        out
    }

    /// `½α∧α + Re β − Φ`.
    pub fn alpha_beta_defect(&self) -> Result<Multivector> {
        let a = self.alpha();
        Ok(&(&a.wedge(&a)?.scale(&crate::rational::qf(1, 2)) + &self.re_beta()) - &self.phi)
    }

    pub fn stabilizer(&self) -> Vec<Matrix> {
        stabilizer_algebra(&self.phi, Ambient::So)
    }

    /// `α ↦ ⋆(Φ∧α)` on Λ².
    pub fn two_form_operator(&self) -> Matrix {
        operator_matrix(self.space(), 2, |a| self.phi.wedge(a)?.hodge_star()).expect("degrees fit")
    }

    pub fn decomposition(&self, degree: usize) -> Result<&Decomposition> {
        if !(2..=4).contains(&degree) {
            return Err(Error::Degree(format!("Spin(7) splits exist for degrees 2, 3, 4, not {degree}")));
        }
        Ok(self.splits[degree - 2].get_or_init(|| self.build(degree).expect("Spin(7) modules span Λᵏ")))
    }

    fn build(&self, degree: usize) -> Result<Decomposition> {
        let sp = self.space();
        match degree {
            2 => {
                let l = self.two_form_operator();
                Decomposition::new(sp, 2, vec![("7".into(), eigenspace(&l, &q(3))), ("21".into(), eigenspace(&l, &q(-1)))])
            }
            3 => {
                let p8: Vec<Vector> = (0..8)
                    .map(|i| {
                        let a = Multivector::from_vector(sp, 1, &unit(8, i));
                        self.phi.wedge(&a).and_then(|x| x.hodge_star()).map(|x| x.to_vector())
                    })
                    .collect::<Result<_>>()?;
                let p48 = operator_matrix(sp, 3, |b| self.phi.wedge(b))?.nullspace();
                Decomposition::new(sp, 3, vec![("8".into(), p8), ("48".into(), p48)])
            }
            _ => {
                let seven = self.decomposition(2)?.basis(0).to_vec();
                let p1 = vec![self.phi.to_vector()];
                let p7: Vec<Vector> = seven
                    .iter()
                    .map(|v| act(&two_form_to_matrix(&Multivector::from_vector(sp, 2, v)), &self.phi).to_vector())
                    .collect();
                let star = operator_matrix(sp, 4, |x| x.hodge_star())?;
                let p35 = eigenspace(&star, &q(-1));
                let mut known = p1.clone();
                known.extend(p7.iter().cloned());
                known.extend(p35.iter().cloned());
                let p27 = orthogonal_complement(&known, &form_gram(sp, 4));
                Decomposition::new(
                    sp,
                    4,
                    vec![("1".into(), p1), ("7".into(), p7), ("27".into(), p27), ("35".into(), p35)],
                )
            }
        }
    }

    /// Graded parts of `x`, in the order of `decomposition(deg x).names()`.
    pub fn split(&self, x: &Multivector) -> Result<Vec<Multivector>> {
        self.decomposition(x.degree())?.project(&x.with_space(self.space()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{standard_g2_form, G2Variant};

    fn standard() -> Spin7Structure {
        spin7_from_g2(&standard_g2_form(G2Variant::Frame)).unwrap()
    }

    #[test]
    fn square_and_self_duality() {
        let s = standard();
        let vol = Multivector::volume(s.space()).unwrap();
        assert_eq!(s.phi().wedge(s.phi()).unwrap(), vol.scale(&q(14)));
        assert_eq!(s.phi().hodge_star().unwrap(), *s.phi());
        assert!(Spin7Structure::new(s.phi()).is_ok());
    }

    #[test]
    fn alpha_beta_formula() {
        assert!(standard().alpha_beta_defect().unwrap().is_zero());
    }

    #[test]
    fn bad_degree() {
        assert!(standard().decomposition(5).is_err());
    }

    #[test]
    fn module_dimensions() {
        let s = standard();
        assert_eq!(s.decomposition(2).unwrap().dims(), vec![7, 21]);
        assert_eq!(s.decomposition(3).unwrap().dims(), vec![8, 48]);
        assert_eq!(s.decomposition(4).unwrap().dimension_row(), "1 + 7 + 27 + 35 = 70");
        assert_eq!(s.stabilizer().len(), 21);
    }

    #[test]
    fn split_reassembles() {
        let s = standard();
        let mut r = crate::sample::rng(3);
        let x = crate::sample::form(&mut r, s.space(), 4);
        let parts = s.split(&x).unwrap();
        let sum = parts.iter().fold(Multivector::zero(s.space(), 4), |a, b| &a + b);
        assert_eq!(sum, x);
        for i in 0..4 {
            for j in i + 1..4 {
                assert_eq!(parts[i].form_inner(&parts[j]).unwrap(), q(0));
            }
        }
    }
}
