//! Quiver currents, quiver Hall-Littlewood functions and Kostka-Shoji
//! polynomials, computed by the operator expansion and by Kostant partitions.

mod kostant;
mod operator;
mod structure;
mod tensor;

pub use kostant::{kostant_coefficient, KostantOracle};
pub use operator::{
    current_apply, hl_function, kostka_shoji_operator, qt_current_apply, CurrentOperator, SkewEntry, Twist,
};
pub use structure::{check_cycle_coset, check_single_monomial, collapse_all_arrows, collapse_cycle, reduced_polynomial};
pub use tensor::{partition_tuples, TensorSchur};
