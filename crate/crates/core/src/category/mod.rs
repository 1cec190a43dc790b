//! `≤₀` relative to a subcategory, coproducts and pullbacks of finite
//! spaces with their universal properties checked, and the thin category
//! of a finite poset.
//!
//! Orientation: `u ≤₀ v` holds when `u = v ∘ G` for some `G` in the
//! subcategory, matching `f = g ∘ G` for maps.

mod finite;
mod spaces;

pub use finite::{poset_to_category, Arrow, FinCategory, ThinCategory, UniversalCone};
pub use spaces::{
    continuous, coproduct_with_mediator, le0_cat, pullback_with_mediator, CoproductCone, Mediator, PullbackCone,
    SpaceCategory,
};

use crate::error::Result;

pub trait Category {
    type Object;
    type Morphism;

    fn source(&self, m: &Self::Morphism) -> Self::Object;
    fn target(&self, m: &Self::Morphism) -> Self::Object;
    fn identity(&self, a: &Self::Object) -> Self::Morphism;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Morphism, f: &Self::Morphism) -> Result<Self::Morphism>;
}
