use super::g2::G2Structure;
use crate::linalg::Vector;
use crate::rational::Q;
use num::{One, Signed, Zero};

/// `(x⁰ + x)(y⁰ + y) = (x⁰y⁰ − g(x,y))e₀ + x⁰y + y⁰x + x × y` on ℝ ⊕ ℝ⁷.
#[derive(Clone, Debug)]
pub struct OctonionAlgebra {
    source: G2Structure,
}

impl OctonionAlgebra {
    pub fn new(source: &G2Structure) -> Self {
        OctonionAlgebra { source: source.clone() }
    }

    pub fn source(&self) -> &G2Structure {
        &self.source
    }

    pub fn multiply(&self, z: &[Q], w: &[Q]) -> Vector {
        assert!(z.len() == 8 && w.len() == 8, "octonions have 8 components");
        let g = self.source.metric();
        let (x0, x) = (&z[0], &z[1..]);
        let (y0, y) = (&w[0], &w[1..]);
        let cross = self.source.cross(x, y);
        let mut out = Vec::with_capacity(8);
        out.push(x0 * y0 - g.bilinear(x, y));
        for i in 0..7 {
            out.push(x0 * &y[i] + y0 * &x[i] + &cross[i]);
        }
        out
    }

    pub fn conj(&self, z: &[Q]) -> Vector {
        std::iter::once(z[0].clone()).chain(z[1..].iter().map(|c| -c)).collect()
    }

    pub fn norm2(&self, z: &[Q]) -> Q {
        &z[0] * &z[0] + self.source.metric().bilinear(&z[1..], &z[1..])
    }

    /// `(ab)c − a(bc)`.
    pub fn associator(&self, a: &[Q], b: &[Q], c: &[Q]) -> Vector {
        let l = self.multiply(&self.multiply(a, b), c);
        let r = self.multiply(a, &self.multiply(b, c));
        l.iter().zip(&r).map(|(x, y)| x - y).collect()
    }

    /// Products of basis elements, `table[i][j] = e_i e_j`.
    pub fn table(&self) -> Vec<Vec<Vector>> {
        (0..8).map(|i| (0..8).map(|j| self.multiply(&basis(i), &basis(j))).collect()).collect()
    }

    /// Whether `(aa)b = a(ab)` and `(ab)b = a(bb)` on all basis pairs.
    pub fn is_alternative_on_basis(&self) -> bool {
        (0..8).all(|i| {
            (0..8).all(|j| {
                let (a, b) = (basis(i), basis(j));
                self.associator(&a, &a, &b).iter().all(Zero::is_zero)
                    && self.associator(&a, &b, &b).iter().all(Zero::is_zero)
            })
        })
    }
}

pub fn basis(i: usize) -> Vector {
    crate::linalg::unit(8, i)
}

/// `e3`, `-e6`, or a coefficient list when not a signed basis element.
pub fn label(v: &[Q]) -> String {
    let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
    match nz.as_slice() {
        [] => "0".into(),
        [i] if v[*i].abs().is_one() => format!("{}e{}", if v[*i].is_negative() { "-" } else { "" }, i),
        _ => format!("({})", v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{standard_g2_form, G2Variant};

    #[test]
    fn non_associative_triple() {
        let o = OctonionAlgebra::new(&standard_g2_form(G2Variant::Frame));
        let (e1, e2, e5) = (basis(1), basis(2), basis(5));
        assert_eq!(label(&o.multiply(&e1, &o.multiply(&e2, &e5))), "e6");
        assert_eq!(label(&o.multiply(&o.multiply(&e1, &e2), &e5)), "-e6");
        assert_eq!(label(&o.multiply(&basis(2), &basis(3))), "e1");
    }

    #[test]
    fn squares_and_alternativity() {
        let o = OctonionAlgebra::new(&standard_g2_form(G2Variant::Frame));
        for k in 1..8 {
            assert_eq!(label(&o.multiply(&basis(k), &basis(k))), "-e0");
        }
        assert!(o.is_alternative_on_basis());
    }
}
