use crate::curvature::{decompose, is_einstein, AlgebraicCurvatureTensor};
use crate::error::Result;
use crate::exterior::{InnerSpace, Multivector};
use crate::invariant::{CheckItem, VerificationReport};
use crate::linalg::Matrix;
use crate::rational::{q, Q};
use crate::rep;
use crate::special::{octonion_label, spin7_from_g2, standard_g2_form, G2Variant, OctonionAlgebra};

fn item(name: &str, pass: bool, detail: impl Into<String>) -> CheckItem {
    CheckItem { name: name.into(), pass, detail: detail.into() }
}

fn eigen_dim(l: &Matrix, lambda: i64) -> usize {
    let n = l.rows();
    l.sub(&Matrix::identity(n).scale(&q(lambda))).nullspace().len()
}

fn g2_report() -> Result<VerificationReport> {
    let mut items = Vec::new();
    for v in [G2Variant::Frame, G2Variant::Coordinate] {
        let g = standard_g2_form(v);
        let l = g.two_form_operator();
        let (p, m) = (eigen_dim(&l, 2), eigen_dim(&l, -1));
        items.push(item(&format!("*(phi ^ .) on 2-forms has eigenvalues 2 (x7), -1 (x14) [{v:?}]"), (p, m) == (7, 14), format!("{p}, {m}")));
        let row = g.three_form_decomposition().dimension_row();
        items.push(item(&format!("3-forms split [{v:?}]"), row == "1 + 7 + 27 = 35", row));
        let vol = Multivector::volume(g.space())?;
        items.push(item(&format!("phi ^ *phi = 7 vol [{v:?}]"), g.phi().wedge(g.star_phi())? == vol.scale(&q(7)), "7"));
    }
    let stab = standard_g2_form(G2Variant::Frame).stabilizer();
    items.push(item("stabilizer of phi in so(7)", stab.len() == 14, format!("dim {}", stab.len())));
    Ok(VerificationReport::new("g2-forms", items))
}

fn spin7_report() -> Result<VerificationReport> {
    let s = spin7_from_g2(&standard_g2_form(G2Variant::Coordinate))?;
    let vol = Multivector::volume(s.space())?;
    let mut items = vec![item("Phi ^ Phi = 14 vol", s.phi().wedge(s.phi())? == vol.scale(&q(14)), "14")];
    let l = s.two_form_operator();
    let (p, m) = (eigen_dim(&l, 3), eigen_dim(&l, -1));
    items.push(item("*(Phi ^ .) on 2-forms has eigenvalues 3 (x7), -1 (x21)", (p, m) == (7, 21), format!("{p}, {m}")));
    for (d, want) in [(3, "8 + 48 = 56"), (4, "1 + 7 + 27 + 35 = 70")] {
        let row = s.decomposition(d)?.dimension_row();
        items.push(item(&format!("{d}-forms split"), row == want, row));
    }
    let stab = s.stabilizer();
    items.push(item("stabilizer of Phi in so(8)", stab.len() == 21, format!("dim {}", stab.len())));
    Ok(VerificationReport::new("spin7-forms", items))
}

fn octonion_report() -> VerificationReport {
    let o = OctonionAlgebra::new(&standard_g2_form(G2Variant::Frame));
    let e = crate::special::octonion_basis;
    let m = |a: &[Q], b: &[Q]| o.multiply(a, b);
    let cases = [
        ("e1 e2 = e3", octonion_label(&m(&e(1), &e(2))), "e3"),
        ("e2 e3 = e1", octonion_label(&m(&e(2), &e(3))), "e1"),
        ("e1 (e2 e5) = e6", octonion_label(&m(&e(1), &m(&e(2), &e(5)))), "e6"),
        ("(e1 e2) e5 = -e6", octonion_label(&m(&m(&e(1), &e(2)), &e(5))), "-e6"),
    ];
    let items = cases.iter().map(|(n, got, want)| item(n, got == want, got.clone())).collect();
    VerificationReport::new("octonions", items)
}

fn curvature_report() -> Result<VerificationReport> {
    let mut items = Vec::new();
    for n in 3..=6 {
        let space = InnerSpace::standard(n);
        let r = AlgebraicCurvatureTensor::constant(&space, q(1));
        let d = decompose(&r)?;
        let s = q((n * (n - 1)) as i64);
        let pass = d.scalar == s && d.z_part.is_zero() && d.weyl_part.is_zero() && is_einstein(&r);
        items.push(item(&format!("unit sphere curvature in dimension {n} is pure scalar"), pass, format!("scalar {}", d.scalar)));
    }
    Ok(VerificationReport::new("curvature", items))
}

fn rep_report() -> Result<VerificationReport> {
    let mut items = Vec::new();
    let rs = rep::roots_from_torus(&rep::su3())?;
    let mut shown: Vec<String> = rs.roots.iter().map(|r| rs.display_string(r)).collect::<Result<_>>()?;
    shown.sort();
    let mut want: Vec<String> = ["(0, 2)", "(0, -2)", "(√3, -1)", "(-√3, 1)", "(√3, 1)", "(-√3, -1)"].map(String::from).to_vec();
    want.sort();
    items.push(item("su(3) roots", shown == want, shown.join(" ")));
    let weights: Vec<String> = rs.fundamental_weights.iter().map(|w| rs.display_string(w)).collect::<Result<_>>()?;
    items.push(item("su(3) fundamental weights", weights == ["(√3/3, 1)", "(2√3/3, 0)"], weights.join(" ")));
    let mut orders = Vec::new();
    for name in ["su2", "su3", "g2"] {
        orders.push(rep::roots_from_torus(&rep::by_name(name)?)?.weyl_group_order()?);
    }
    items.push(item("Weyl group orders of su(2), su(3), g2", orders == [2, 6, 12], format!("{orders:?}")));
    let cg = rep::clebsch_gordan_su2(2, 2);
    items.push(item("V2 (x) V2 = V4 + V2 + V0", cg == [4, 2, 0], format!("{cg:?}")));
    Ok(VerificationReport::new("rep-theory", items))
}

/// Algebraic checks run by `verify all` before the structure equations.
pub(crate) fn algebraic_checks() -> Result<Vec<VerificationReport>> {
    Ok(vec![g2_report()?, spin7_report()?, octonion_report(), curvature_report()?, rep_report()?])
}
