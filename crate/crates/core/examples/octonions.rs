//! Octonion multiplication table from the G2 cross product.

use holonomy::special::{octonion_basis, octonion_label, standard_g2_form, G2Variant, OctonionAlgebra};

fn main() {
    let o = OctonionAlgebra::new(&standard_g2_form(G2Variant::Frame));
    for row in o.table() {
        let cells: Vec<String> = row.iter().map(|v| format!("{:>4}", octonion_label(v))).collect();
        println!("{}", cells.join(" "));
    }
    let (a, b, c) = (octonion_basis(1), octonion_basis(2), octonion_basis(4));
    println!("alternative on basis: {}", o.is_alternative_on_basis());
    println!("[e1, e2, e4] = {}", octonion_label(&o.associator(&a, &b, &c)));
}
