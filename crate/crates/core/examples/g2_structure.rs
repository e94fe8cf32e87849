//! The standard G2 form: its metric, cross product, stabilizer and form splittings.

use holonomy::exterior::Multivector;
use holonomy::rational::q;
use holonomy::special::{standard_g2_form, G2Variant};

fn main() -> holonomy::Result<()> {
    let g = standard_g2_form(G2Variant::Frame);
    println!("φ  = {}", g.phi());
    println!("⋆φ = {}", g.star_phi());
    println!("metric is identity: {}", *g.metric() == holonomy::linalg::Matrix::identity(7));
    let e = |i: usize| (0..7).map(|k| q(i64::from(k == i - 1))).collect::<Vec<_>>();
    println!("e1 × e2 = {}", show(&g.cross(&e(1), &e(2))));
    println!("dim stabilizer = {}", g.stabilizer().len());

    let c = Multivector::basis(g.space(), &[1, 2, 3]);
    let (c1, c7, c27) = g.three_form_split(&c)?;
    println!("{}", g.three_form_decomposition().dimension_row());
    println!("e123: Λ³₁ part {c1}\n      Λ³₇ zero {}\n      |Λ³₂₇|² = {}", c7.is_zero(), c27.norm2());
    let a = Multivector::basis(g.space(), &[1, 2]);
    let (a7, a14) = g.two_form_split(&a)?;
    println!("e12: |Λ²₇|² = {}, |Λ²₁₄|² = {}", a7.norm2(), a14.norm2());
    Ok(())
}

fn show(v: &[holonomy::rational::Q]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}
