use std::sync::Arc;

use super::Category;
use crate::error::{Error, Result};
use crate::lattice::{inf0, sup0, TaggedFamily};
use crate::reduce::search::Counter;
use crate::topo::{compose_total, coproduct_tagged, ensure_same, product, Coproduct, Space, TotalMap};

/// Finite spaces with all functions as morphisms. Continuity is a
/// property of morphisms, used as the subcategory predicate.
#[derive(Clone, Copy, Debug, Default)]
pub struct SpaceCategory;

impl Category for SpaceCategory {
    type Object = Arc<Space>;
    type Morphism = TotalMap;

    fn source(&self, m: &TotalMap) -> Arc<Space> {
        m.dom().clone()
    }

    fn target(&self, m: &TotalMap) -> Arc<Space> {
        m.cod().clone()
    }

    fn identity(&self, a: &Arc<Space>) -> TotalMap {
        TotalMap::identity(a)
    }

    fn compose(&self, g: &TotalMap, f: &TotalMap) -> Result<TotalMap> {
        compose_total(g, f)
    }
}

/// The subcategory of continuous maps.
pub fn continuous(m: &TotalMap) -> bool {
    m.is_continuous()
}

/// `u ≤₀ v` relative to the subcategory `k`: a morphism `G` in `k` with
/// `u = v ∘ G`. All functions `dom(u) → dom(v)` compatible with the
/// equation are tried in lexicographic order.
pub fn le0_cat(u: &TotalMap, v: &TotalMap, k: &dyn Fn(&TotalMap) -> bool, budget: u64) -> Result<Option<TotalMap>> {
    ensure_same(u.cod(), v.cod())
        .map_err(|_| Error::CodomainMismatch { left: u.name().to_string(), right: v.name().to_string() })?;
    let (x, y) = (u.dom(), v.dom());
    let candidates: Vec<Vec<usize>> =
        (0..x.len()).map(|p| (0..y.len()).filter(|&q| v.value(q) == u.value(p)).collect()).collect();
    if candidates.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    let mut counter = Counter::new(budget);
    let mut choice = vec![0usize; x.len()];
    loop {
        counter.tick()?;
        let table = choice.iter().enumerate().map(|(p, &c)| candidates[p][c]).collect();
        let g = TotalMap::new(&format!("G_{}_{}", u.name(), v.name()), x.clone(), y.clone(), table)?;
        if k(&g) {
            return Ok(Some(g));
        }
        let mut p = x.len();
        loop {
            if p == 0 {
                return Ok(None);
            }
            p -= 1;
            choice[p] += 1;
            if choice[p] < candidates[p].len() {
                break;
            }
            choice[p] = 0;
        }
    }
}

/// A coproduct of the domains of a cocone with its mediating morphism.
#[derive(Clone, Debug)]
pub struct CoproductCone {
    pub coproduct: Coproduct,
    pub injections: Vec<TotalMap>,
    pub mediator: TotalMap,
    /// Number of maps `f` satisfying `f_i = f ∘ μ_i`; 1 for a coproduct.
    pub solutions: usize,
}

/// The coproduct of the domains of `f_i: A_i → Z` together with the
/// mediator `f` (the `↑f_i↑` construction). The equations are replayed and
/// every map `A → Z` is counted against them.
pub fn coproduct_with_mediator(cod: &Arc<Space>, family: &TaggedFamily<TotalMap>) -> Result<CoproductCone> {
    let mediator = sup0(cod, family)?;
    let coproduct = coproduct_tagged(&family.iter().map(|(t, f)| (t.to_string(), f.dom().clone())).collect::<Vec<_>>())?;
    let injections = coproduct.injections();
    for ((_, f), mu) in family.iter().zip(&injections) {
        if compose_total(&mediator, mu)?.values() != f.values() {
            return Err(Error::InvalidWitness(format!("mediator does not restrict to {}", f.name())));
        }
    }
    // For each point of A, the values allowed by the equations.
    let solutions = (0..coproduct.space.len())
        .map(|a| {
            (0..cod.len())
                .filter(|&z| {
                    family.iter().zip(&injections).all(|((_, f), mu)| {
                        (0..f.dom().len()).all(|x| mu.value(x) != a || f.value(x) == z)
                    })
                })
                .count()
        })
        .product();
    Ok(CoproductCone { coproduct, injections, mediator, solutions })
}

/// A pullback of `f_i: A_i → Z`: the fibered subspace `P` of the product,
/// its projections and the common composite `f_i ∘ p_i`.
#[derive(Clone, Debug)]
pub struct PullbackCone {
    pub object: Arc<Space>,
    pub projections: Vec<TotalMap>,
    pub apex: TotalMap,
    maps: Vec<TotalMap>,
}

/// The mediating morphism for a competing cone.
#[derive(Clone, Debug)]
pub struct Mediator {
    pub lambda: TotalMap,
    /// Number of maps `λ` with `q_i = p_i ∘ λ`; 1 for a pullback.
    pub solutions: usize,
}

pub fn pullback_with_mediator(cod: &Arc<Space>, family: &TaggedFamily<TotalMap>) -> Result<PullbackCone> {
    if family.is_empty() {
        return Err(Error::Precondition("pullback of an empty family".into()));
    }
    let apex = inf0(cod, family)?;
    let object = apex.dom().clone();
    let prod = product(&family.items().map(|f| f.dom().clone()).collect::<Vec<_>>())?;
    // `apex.dom()` is a subspace of the product with the same point names.
    let inclusion: Vec<usize> =
        object.points().iter().map(|p| prod.space.index_of(p).expect("fibered point of the product")).collect();
    let projections = (0..family.len())
        .map(|i| {
            let pr = prod.projection(i);
            TotalMap::new(&format!("p{i}"), object.clone(), pr.cod().clone(), inclusion.iter().map(|&p| pr.value(p)).collect())
        })
        .collect::<Result<Vec<_>>>()?;
    for (f, p) in family.items().zip(&projections) {
        if compose_total(f, p)?.values() != apex.values() {
            return Err(Error::InvalidWitness(format!("{} composed with its projection differs", f.name())));
        }
    }
    Ok(PullbackCone { object, projections, apex, maps: family.items().cloned().collect() })
}

impl PullbackCone {
    /// The unique `λ: Q → P` with `q_i = p_i ∘ λ` for a cone with
    /// `f_i ∘ q_i` independent of `i`.
    pub fn mediate(&self, cone: &[TotalMap]) -> Result<Mediator> {
        if cone.len() != self.maps.len() {
            return Err(Error::Precondition("cone has the wrong number of legs".into()));
        }
        let q = cone[0].dom().clone();
        let mut common = None;
        for (f, leg) in self.maps.iter().zip(cone) {
            ensure_same(&q, leg.dom())?;
            ensure_same(f.dom(), leg.cod())?;
            let c = compose_total(f, leg)?.values();
            if common.get_or_insert_with(|| c.clone()) != &c {
                return Err(Error::Precondition("cone does not commute".into()));
            }
        }
        let mut solutions = 1usize;
        let mut table = Vec::with_capacity(q.len());
        for x in 0..q.len() {
            let fits: Vec<usize> = (0..self.object.len())
                .filter(|&p| self.projections.iter().zip(cone).all(|(pr, leg)| pr.value(p) == leg.value(x)))
                .collect();
            solutions *= fits.len();
            match fits.first() {
                Some(&p) => table.push(p),
                None => return Err(Error::InvalidWitness("no mediating point".into())),
            }
        }
        let lambda = TotalMap::new("lambda", q, self.object.clone(), table)?;
        Ok(Mediator { lambda, solutions })
    }
}
