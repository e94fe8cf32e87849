//! Formal differential algebras, polynomial forms, and the structure-equation checks built on them.

mod checks;
mod dga;
mod flag;
mod parse;
mod polyform;

pub use checks::{
    all_checks, flag_nearly_kahler_check, g2_cone_check, inverse_stereographic, nearly_kahler_dga, rational_sphere_points,
    s6_check_with, s6_nearly_kahler_check, s7_check_with, s7_nearly_parallel_check, spin7_cone_check, spin7_cone_dga,
    CheckItem, ConeSource, Status, VerificationReport, S6_POINTS, S7_POINTS, SPIN7_CONE_LAMBDAS,
};
pub use dga::{DgaBuilder, Form, FormalDGA, Generator, Monomial};
pub use flag::{LieCoframeModel, OMEGA, OMEGA_BAR};
pub use polyform::{Poly, PolyForm};
