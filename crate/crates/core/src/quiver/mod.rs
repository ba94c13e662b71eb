//! Quivers, current sequences, slot indexing, roots and dominance.

mod current;
mod graph;
mod random;
mod spec;

pub use current::{CurrentSequence, FlagIndexing, Root, Step, VertexWeights};
pub use graph::{Arrow, Classification, CycleLattice, Quiver};
pub use random::{random_dominant_sequence, random_sequence, RandomLimits};
pub use spec::{parse_spec, to_spec_json};
