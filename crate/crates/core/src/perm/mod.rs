//! Permutation groups on hyperplane indices.

mod group;
mod index_set;
mod orbit;
mod permutation;
mod stabilizer;

pub use group::PermGroup;
pub use index_set::IndexSet;
pub use orbit::{minimal_image_exact, orbit_of_set, pseudo_minimal_image, DEFAULT_ORBIT_BUDGET};
pub use permutation::Permutation;
pub use stabilizer::{suffix_stabilizers, ENUMERATION_LIMIT};
