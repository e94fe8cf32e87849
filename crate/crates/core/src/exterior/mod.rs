//! Sparse exterior algebra with exact coefficients.

mod multivector;
mod space;
mod tensor;

pub use multivector::{basis_tuples, binomial, permutation_sign, Multivector};
pub use space::{InnerSpace, Space};
pub use tensor::{is_s2_lambda2, kulkarni_nomizu, multi_indices, permutations, SymTensor2, Tensor};
