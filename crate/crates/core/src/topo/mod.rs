//! Finite topological spaces as specialization preorders, together with maps,
//! problems and relations between them.

mod map;
mod problem;
mod space;

pub use map::{compose, compose_total, delta, map_equal, pi_pair, pi_power, pi_product, restrict, PartialMap, TotalMap};
pub use problem::{Problem, Relation, DEFAULT_MEMBER_CAP};
pub use space::{coproduct, coproduct_tagged, product, subspace, Coproduct, PointSet, Product, Space, Subspace};
pub(crate) use space::{ensure_same, numbered};
