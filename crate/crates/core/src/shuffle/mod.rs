//! Finite-variable shuffle products, Demazure symmetrizers, pushforward
//! classes and truncated Hall-Littlewood series.

mod grouped;
mod products;

pub use grouped::{
    antisymmetrize, demazure, demazure_by_straightening, from_schur_table, schur_expansion, GroupedPoly, SchurTable,
};
pub use products::{
    chi_by_shuffles, chi_truncated, chi_truncated_schur, hl_r_polynomial, psi_class, qt_shuffle, qt_shuffle_schur,
    schur_coefficient, shuffle_hat, shuffle_hat_schur, shuffle_star, step_schur,
};
