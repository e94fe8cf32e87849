//! Exact rational computations for exterior algebra, curvature decompositions,
//! G2 and Spin(7) structures, root systems and structure-equation checks.

pub mod cli;
pub mod curvature;
pub mod error;
pub mod exterior;
pub mod invariant;
pub mod linalg;
pub mod rational;
pub mod rep;
pub mod sample;
pub mod special;

pub use error::{Error, Result};
