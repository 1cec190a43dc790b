//! Exact decision procedures for continuous reducibilities between maps on
//! finite topological spaces.
//!
//! A finite space is encoded by its specialization preorder, which turns
//! continuity into monotonicity and makes every question about the many-one
//! reducibility `≤₀`, the one-oracle-call reducibility `≤₂` and its
//! truth-table variant decidable by finite search. On top of the deciders
//! the crate provides the coproduct-based suprema and fibered infima, the
//! Level and Basesize invariants, a small categorical layer, degree posets
//! with DOT output, and the `.clt` corpus format used by the `contred` binary.

pub mod category;
pub mod cli;
pub mod error;
pub mod explore;
pub mod invariants;
pub mod lattice;
pub mod reduce;
pub mod topo;

pub use error::{Error, Result};
