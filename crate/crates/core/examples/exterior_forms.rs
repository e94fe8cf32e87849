//! Wedge, interior product and Hodge star on ℝ⁴, exact throughout.

use holonomy::exterior::{InnerSpace, Multivector};
use holonomy::linalg::Matrix;
use holonomy::rational::q;

fn main() -> holonomy::Result<()> {
    let s = InnerSpace::standard(4);
    let w = Multivector::from_int_terms(&s, 2, &[(&[1, 2], 1), (&[3, 4], 1)]);
    println!("ω       = {w}");
    println!("ω∧ω     = {}", w.wedge(&w)?);
    println!("⋆ω      = {}", w.hodge_star()?);
    println!("ι_e1 ω  = {}", w.interior(&[q(1), q(0), q(0), q(0)])?);
    let (plus, minus) = w.selfdual_split()?;
    println!("ω = ω⁺ + ω⁻ with ω⁺ = {plus}, ω⁻ = {minus}");

    // a non-standard metric diag(4, 1, 1, 1)
    let mut g = Matrix::identity(4);
    g[(0, 0)] = q(4);
    let bent = InnerSpace::new(g, 1)?;
    let e1 = Multivector::basis(&bent, &[1]);
    println!("|e¹|² under diag(4,1,1,1) = {}", e1.norm2());
    println!("⋆e¹ = {}", e1.hodge_star()?);
    Ok(())
}
