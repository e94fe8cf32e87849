//! Decomposes a random algebraic curvature tensor on ℝ⁴ and splits its Weyl part into W±.

use holonomy::curvature::{decompose, quadratic_invariants, ricci, singer_thorpe_split, weyl_norm2, AlgebraicCurvatureTensor, InvariantSpace};
use holonomy::exterior::InnerSpace;
use holonomy::rational::q;
use holonomy::sample;

fn main() -> holonomy::Result<()> {
    let s = InnerSpace::standard(4);
    let r = sample::curvature(&mut sample::rng(7), &s);
    let d = decompose(&r)?;
    println!("scalar curvature      {}", d.scalar);
    println!("Ricci row 1           {}", show(&ricci(&r).matrix().row(0)));
    println!("|W|²                  {}", weyl_norm2(&d));
    println!("reassembles           {}", d.reassemble() == *r.tensor());

    let st = singer_thorpe_split(&r)?;
    println!("W⁺ zero {}, W⁻ zero {}", st.w_plus.is_zero(), st.w_minus.is_zero());

    let sphere = AlgebraicCurvatureTensor::constant(&s, q(1));
    println!("unit sphere: scalar {}", decompose(&sphere)?.scalar);

    for inv in quadratic_invariants(InvariantSpace::S2Lambda2, 4)? {
        println!("  {} = {}", inv.name, inv.eval(r.tensor())?);
    }
    Ok(())
}

fn show(v: &[holonomy::rational::Q]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}
