use super::dga::{DgaBuilder, Form, FormalDGA};
use crate::error::{Error, Result};
use crate::rational::CQ;

/// Left-invariant coframe of SU(3): `θ₁, θ₂` (with `θ₃ = −θ₁ − θ₂`), `ω¹, ω², ω³` and conjugates.
/// The differential is read off from `dk = −k∧k` for the Maurer–Cartan form `k`.
#[derive(Clone, Debug)]
pub struct LieCoframeModel {
    dga: FormalDGA,
    k: Vec<Vec<Form>>,
}

pub const OMEGA: [&str; 3] = ["w1", "w2", "w3"];
pub const OMEGA_BAR: [&str; 3] = ["wb1", "wb2", "wb3"];

fn unit_inverse(c: &CQ) -> Result<CQ> {
    let n = &c.re * &c.re + &c.im * &c.im;
    if n != crate::rational::q(1) {
        return Err(Error::InvalidInput("Maurer–Cartan entry coefficient is not a unit".into()));
    }
    Ok(c.conj())
}

impl LieCoframeModel {
    pub fn su3_flag() -> Result<Self> {
        let bare = DgaBuilder::new()
            .real("theta1", 1)
            .real("theta2", 1)
            .complex("w1", "wb1", 1)
            .complex("w2", "wb2", 1)
            .complex("w3", "wb3", 1)
            .with_t()
            .build_unchecked()?;
        let p = |s: &str| bare.parse(s);
        let theta3 = p("-theta1 - theta2")?;
        let mi = CQ::from_int(0, -1);
        let k = vec![
            vec![theta3.scale(&mi), p("-wb1")?, p("i w2")?],
            vec![p("w1")?, p("-i theta2")?, p("-wb3")?],
            vec![p("i wb2")?, p("w3")?, p("-i theta1")?],
        ];
        let kk = |a: usize, b: usize| {
            (0..3).fold(Form::zero(), |acc, c| acc.add(&bare.mul(&k[a][c], &k[c][b]))).scale(&CQ::from_int(-1, 0))
        };
        let mut rules = Vec::new();
        for (a, row) in k.iter().enumerate() {
            for (b, entry) in row.iter().enumerate() {
                if entry.terms().len() != 1 {
                    continue;
                }
                let (m, c) = entry.terms().iter().next().expect("one term");
                let g = &bare.generators()[m.gens[0]].name;
                rules.push((g.clone(), kk(a, b).scale(&unit_inverse(c)?)));
            }
        }
        let dga = bare.with_rules(rules)?;
        Ok(LieCoframeModel { dga, k })
    }

    pub fn dga(&self) -> &FormalDGA {
        &self.dga
    }

    pub fn k(&self) -> &[Vec<Form>] {
        &self.k
    }

    /// Entries of `dk + k∧k` that fail to vanish, including the `θ₃` entry that was not used to define `d`.
    pub fn maurer_cartan_defects(&self) -> Result<Vec<((usize, usize), Form)>> {
        let a = &self.dga;
        let mut out = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                let mut f = a.d(&self.k[i][j])?;
                for c in 0..3 {
                    f = f.add(&a.mul(&self.k[i][c], &self.k[c][j]));
                }
                if !f.is_zero() {
                    out.push(((i + 1, j + 1), f));
                }
            }
        }
        Ok(out)
    }

    pub fn theta(&self, i: usize) -> Result<Form> {
        match i {
            1 => self.dga.gen("theta1"),
            2 => self.dga.gen("theta2"),
            3 => self.dga.parse("-theta1 - theta2"),
            _ => Err(Error::InvalidInput(format!("theta index {i}"))),
        }
    }

    /// `i(θ_j − θ_k)∧ω^i − i ω̄^j∧ω̄^k` for cyclic `(i, j, k)`.
    pub fn cyclic_formula(&self, i: usize) -> Result<Form> {
        let a = &self.dga;
        let (j, k) = ((i % 3) + 1, ((i + 1) % 3) + 1);
        let tj = self.theta(j)?.sub(&self.theta(k)?);
        let w = a.gen(OMEGA[i - 1])?;
        let first = a.mul(&tj, &w).scale(&CQ::i());
        let second = a.mul(&a.gen(OMEGA_BAR[j - 1])?, &a.gen(OMEGA_BAR[k - 1])?).scale(&CQ::from_int(0, -1));
        Ok(first.add(&second))
    }

    /// `Ω = (i/2) Σ ω^i ∧ ω̄^i`.
    pub fn kahler_form(&self) -> Result<Form> {
        let a = &self.dga;
        let mut f = Form::zero();
        for i in 0..3 {
            f = f.add(&a.mul(&a.gen(OMEGA[i])?, &a.gen(OMEGA_BAR[i])?));
        }
        Ok(f.scale(&CQ::new(crate::rational::q(0), crate::rational::qf(1, 2))))
    }

    /// `Ψ = ω¹ ∧ ω² ∧ ω³`.
    pub fn volume_form(&self) -> Result<Form> {
        self.dga.parse("w1^w2^w3")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_formula_matches_maurer_cartan() {
        let m = LieCoframeModel::su3_flag().unwrap();
        assert!(m.maurer_cartan_defects().unwrap().is_empty());
        for i in 1..=3 {
            let d = m.dga().d(&m.dga().gen(OMEGA[i - 1]).unwrap()).unwrap();
            assert_eq!(d, m.cyclic_formula(i).unwrap(), "dω{i}");
        }
    }

    #[test]
    fn structure_equations() {
        let m = LieCoframeModel::su3_flag().unwrap();
        let a = m.dga();
        let om = m.kahler_form().unwrap();
        let psi = m.volume_form().unwrap();
        assert_eq!(a.d(&om).unwrap(), a.re(&psi).scale_q(crate::rational::q(3)));
        let rhs = a.mul(&om, &om).scale(&CQ::from_int(0, -2));
        assert_eq!(a.d(&psi).unwrap(), rhs);
    }
}
