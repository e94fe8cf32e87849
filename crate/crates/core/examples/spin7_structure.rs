//! The Spin(7) four-form built from φ and its module dimensions in degrees 2 to 4.

use holonomy::exterior::Multivector;
use holonomy::special::{spin7_from_g2, standard_g2_form, G2Variant};

fn main() -> holonomy::Result<()> {
    let s = spin7_from_g2(&standard_g2_form(G2Variant::Coordinate))?;
    println!("Φ = {}", s.phi());
    println!("self-dual: {}", s.phi().hodge_star()? == *s.phi());
    println!("dim stabilizer = {}", s.stabilizer().len());
    for k in 2..=4 {
        println!("Λ{k}: {}", s.decomposition(k)?.dimension_row());
    }
    let x = Multivector::basis(s.space(), &[1, 2, 3, 4]);
    for (name, part) in s.decomposition(4)?.names().iter().zip(s.split(&x)?) {
        println!("  e1234 in {name}: |part|² = {}", part.norm2());
    }
    Ok(())
}
