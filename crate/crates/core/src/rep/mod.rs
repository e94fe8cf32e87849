//! Lie algebras from matrices, root systems, and 𝔰𝔲(2)/𝔰𝔬(3) representations.

mod eigen;
mod lie;
mod presets;
mod roots;
mod su2;
mod svg;

pub use lie::{pair, LieAlgebraPresentation};
pub use presets::{by_name, find_torus_in_so, g2, su2, su3};
pub use roots::{lexicographic_positive, roots_from_torus, surd_string, RootSystem};
pub use su2::{
    clebsch_gordan_su2, commutant_dim, h_dim, plethysm_dimension, polynomial_action, so3_plethysm, su2_irrep_matrices,
    su2_peel, su2_tensor_weights, tensor_action, weight_decompose, Plethysm, Su2Irrep,
};
pub use svg::root_diagram_svg;
