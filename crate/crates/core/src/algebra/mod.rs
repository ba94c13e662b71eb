//! Integer partitions, dominant weights, variables and Laurent polynomials.

mod parse;
mod partition;
mod perm;
mod poly;
mod var;
mod weight;

pub use partition::Partition;
pub use perm::signed_permutations;
pub use poly::{LaurentPoly, Monomial};
pub use var::{valid_arrow_name, VarId};
pub use weight::{sort_sign, straighten_weight, DominantWeight, IntVector, Straightened};
