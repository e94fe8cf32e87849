//! G2 and Spin(7) form calculus, octonions, and the U(m) split of 2-forms.

pub mod action;
mod g2;
mod hermitian;
mod octonion;
mod spin7;

pub use action::{act, form_gram, is_closed_under_commutator, matrix_to_two_form, stabilizer_algebra, two_form_to_matrix, Ambient, Decomposition};
pub use g2::{
    literal_3form, literal_4form, metric_from_g2_form, relating_signed_permutations, standard_g2_form, G2Metric,
    G2Structure, G2Variant, FRAME_TERMS, COORDINATE_STAR_TERMS, COORDINATE_TERMS,
};
pub use hermitian::HermitianModel;
pub use octonion::{basis as octonion_basis, label as octonion_label, OctonionAlgebra};
pub use spin7::{seven_to_eight, slot, spin7_from_g2, Spin7Structure, SLOT_OF_ZERO};
