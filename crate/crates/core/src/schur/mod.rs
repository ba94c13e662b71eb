//! Schur functions in one alphabet: Littlewood-Richardson products, skewing,
//! Bernstein creation operators, and finite-variable Schur polynomials.

mod finite;
mod lr;
mod vector;

pub use finite::{alternant, divide_by_vandermonde, schur_poly, vandermonde};
pub use lr::{lr_coefficient, lr_expand};
pub use vector::{tensor_decomposition, tensor_multiplicity, SchurVector};
