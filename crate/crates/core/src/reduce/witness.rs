use std::sync::Arc;

use crate::error::{Error, Result};
use crate::topo::{compose, delta, ensure_same, map_equal, pi_pair, product, PartialMap, Problem, Space, TotalMap};

/// Certificate for `f ≤₀ g`: a continuous `G` with `f = g ∘ G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness0 {
    pub g: PartialMap,
}

impl Witness0 {
    /// Replays `f = g ∘ G` with `G` continuous and total.
    pub fn verify_fn(&self, f: &TotalMap, g: &TotalMap) -> Result<()> {
        if !self.g.is_total() {
            return Err(Error::InvalidWitness("G must be total for functions".into()));
        }
        self.check_continuous()?;
        if !map_equal(&compose(g, &self.g)?, f)? {
            return Err(Error::InvalidWitness(format!("{} != {} . G", f.name(), g.name())));
        }
        Ok(())
    }

    /// Replays `g ∘ G ∈ P` for every `g ∈ Q`.
    pub fn verify_problem(&self, p: &Problem, q: &Problem) -> Result<()> {
        self.check_continuous()?;
        for g in q.members() {
            let h = compose(g, &self.g)?;
            if !p.contains(&h) {
                return Err(Error::InvalidWitness(format!("{} . G is not a member of {}", g.name(), p.name())));
            }
        }
        Ok(())
    }

    /// Certificate for `f ≤₀ h` from `f ≤₀ g` (self) and `g ≤₀ h` (next).
    pub fn then(&self, next: &Witness0) -> Result<Witness0> {
        Ok(Witness0 { g: compose(&next.g, &self.g)? })
    }

    fn check_continuous(&self) -> Result<()> {
        if self.g.is_continuous() {
            Ok(())
        } else {
            Err(Error::InvalidWitness("G is not continuous".into()))
        }
    }
}

/// Certificate for `f ≤₂ g`: continuous partial maps `G: X₁ → X₂` and
/// `F: X₁ × Y₂ → Y₁` with `f = F ∘ (id π (g ∘ G)) ∘ Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness2 {
    pub g: PartialMap,
    pub f: PartialMap,
}

impl Witness2 {
    /// `x ↦ F(x, g(G(x)))`, assembled from the topological operations so the
    /// result is defined exactly where every stage is.
    pub fn composite(&self, g: &PartialMap) -> Result<PartialMap> {
        let x1: &Arc<Space> = self.g.dom();
        let id = TotalMap::identity(x1);
        let inner = pi_pair(&id, &compose(g, &self.g)?)?;
        let h = compose(&self.f, &compose(&inner, &delta(x1))?)?;
        h.renamed(&format!("reduce({})", g.name()))
    }

    pub fn verify_fn(&self, f: &TotalMap, g: &TotalMap) -> Result<()> {
        self.check_continuous()?;
        if !map_equal(&self.composite(g)?, f)? {
            return Err(Error::InvalidWitness(format!("composite does not reproduce {}", f.name())));
        }
        Ok(())
    }

    pub fn verify_problem(&self, p: &Problem, q: &Problem) -> Result<()> {
        self.check_continuous()?;
        for g in q.members() {
            let h = self.composite(g)?;
            if !p.contains(&h) {
                return Err(Error::InvalidWitness(format!("composite for {} is not in {}", g.name(), p.name())));
            }
        }
        Ok(())
    }

    /// Certificate for `f ≤₂ h` from `f ≤₂ g` (self) and `g ≤₂ h` (next):
    /// `G = G₂ ∘ G₁` and `F(x, z) = F₁(x, F₂(G₁(x), z))`. `h_cod` is the
    /// codomain of `h`.
    pub fn then(&self, next: &Witness2, h_cod: &Arc<Space>) -> Result<Witness2> {
        let x1 = self.g.dom();
        let y2 = next.f.cod();
        let outer = product(&[x1.clone(), y2.clone()])?;
        ensure_same(self.f.dom(), &outer.space)?;
        let inner = product(&[next.g.dom().clone(), h_cod.clone()])?;
        ensure_same(next.f.dom(), &inner.space)?;
        let prod = product(&[x1.clone(), h_cod.clone()])?;
        let table = (0..prod.space.len())
            .map(|p| {
                let c = prod.coords(p);
                let a = self.g.apply(c[0])?;
                let y = next.f.apply(inner.index_of(&[a, c[1]]))?;
                self.f.apply(outer.index_of(&[c[0], y]))
            })
            .collect();
        let f = PartialMap::new("F", prod.space.clone(), self.f.cod().clone(), table)?;
        Ok(Witness2 { g: compose(&next.g, &self.g)?, f })
    }

    fn check_continuous(&self) -> Result<()> {
        if !self.g.is_continuous() {
            return Err(Error::InvalidWitness("G is not continuous".into()));
        }
        if !self.f.is_continuous() {
            return Err(Error::InvalidWitness("F is not continuous".into()));
        }
        Ok(())
    }
}
