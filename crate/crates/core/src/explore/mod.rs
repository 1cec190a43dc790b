//! Degree posets, the level decomposition experiment, admissibility,
//! searches for invariant witnesses and antichains, and seeded generators.

mod admissible;
mod decompose;
mod degree;
pub mod enumerate;
mod poset;
pub mod random;
mod search;

pub use admissible::{admissible, admissible_by_quantifier, continuous_supremum};
pub use decompose::{decompose_by_level, LevelDecomposition};
pub use degree::{degree_poset, DegreePoset};
pub use poset::FinitePoset;
pub use random::{random_map, random_partial_map, random_problem, random_space};
pub use search::{search_antichain, search_lev_bas_witness, RANDOM_TRIES};
