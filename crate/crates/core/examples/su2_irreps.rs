//! Irreducible su(2) modules V_n, Clebsch–Gordan by weights, and so(3) plethysms.

use holonomy::rep::{clebsch_gordan_su2, commutant_dim, so3_plethysm, su2_irrep_matrices, su2_tensor_weights, Plethysm};

fn main() -> holonomy::Result<()> {
    for n in 0..=4 {
        let v = su2_irrep_matrices(n);
        println!(
            "V{n}: weights {:?}, su(2) relations {}, commutant dim {}",
            v.weights(),
            v.satisfies_su2_relations(),
            commutant_dim(&[v.k.clone(), v.u.clone(), v.v.clone()])
        );
    }
    let (weights, peeled) = su2_tensor_weights(3, 2)?;
    let listed: Vec<String> = weights.iter().map(|(w, m)| format!("{}×{m}", w[0])).collect();
    println!("V3 ⊗ V2 weights {}", listed.join(" "));
    println!("peeled {peeled:?}, closed form {:?}", clebsch_gordan_su2(3, 2));
    println!("S²H₂ = {:?}", so3_plethysm(Plethysm::Sym2, 2, None)?);
    println!("Λ²H₂ = {:?}", so3_plethysm(Plethysm::Alt2, 2, None)?);
    Ok(())
}
