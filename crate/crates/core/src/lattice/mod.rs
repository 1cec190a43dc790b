//! Coproduct suprema for `≤₂` and `≤₀`, fibered infima for `≤₀`, the
//! constructive distributivity decomposition and bound checkers.

mod distribute;
mod family;
mod verify;

pub use distribute::{distribute2, distribute2_relation, Distribution, RelationDistribution};
pub use family::TaggedFamily;
pub use verify::{verify_glb, verify_lub, BoundReport, BoundViolation};

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::topo::{
    coproduct_tagged, ensure_same, product, subspace, PartialMap, PointSet, Problem, Space, TotalMap,
    DEFAULT_MEMBER_CAP,
};

fn family_name(prefix: &str, names: impl Iterator<Item = String>) -> String {
    format!("{prefix}({})", names.collect::<Vec<_>>().join(","))
}

/// `⌈f_i⌉`: on the coproduct of the domains, `(i, x) ↦ (i, f_i(x))`.
pub fn sup2_partial(family: &TaggedFamily<PartialMap>) -> Result<PartialMap> {
    let doms = coproduct_tagged(&family.map_items(|f| f.dom().clone()))?;
    let cods = coproduct_tagged(&family.map_items(|f| f.cod().clone()))?;
    let mut table = Vec::with_capacity(doms.space.len());
    for (i, (_, f)) in family.iter().enumerate() {
        table.extend(f.table().iter().map(|v| v.map(|y| cods.inject(i, y))));
    }
    let name = family_name("sup2", family.iter().map(|(_, f)| f.name().to_string()));
    PartialMap::new(&name, doms.space.clone(), cods.space.clone(), table)
}

pub fn sup2(family: &TaggedFamily<TotalMap>) -> Result<TotalMap> {
    sup2_partial(&family.map_items_tagged(|f| f.as_partial().clone()))?.into_total()
}

/// `⌈P_i⌉`: all `⌈f_i⌉` with `f_i ∈ P_i`.
pub fn sup2_problem(family: &TaggedFamily<Problem>, cap: usize) -> Result<Problem> {
    let doms = coproduct_tagged(&family.map_items(|p| p.dom().clone()))?;
    let cods = coproduct_tagged(&family.map_items(|p| p.cod().clone()))?;
    let name = family_name("sup2", family.iter().map(|(_, p)| p.name().to_string()));
    let members = selections(family, cap, |choice| {
        let tagged = family.with_items(choice.iter().map(|m| (*m).clone()).collect());
        sup2_partial(&tagged)
    })?;
    Problem::new(&name, doms.space.clone(), cods.space.clone(), members)
}

/// `↑f_i↑`: on the coproduct of the domains, `(i, x) ↦ f_i(x)` into the
/// common codomain `cod`. The empty family gives the empty map, the least
/// element for `≤₀`.
pub fn sup0_partial(cod: &Arc<Space>, family: &TaggedFamily<PartialMap>) -> Result<PartialMap> {
    for (_, f) in family.iter() {
        common_cod(cod, f.cod())?;
    }
    let doms = coproduct_tagged(&family.map_items(|f| f.dom().clone()))?;
    let table = family.iter().flat_map(|(_, f)| f.table().iter().copied()).collect();
    let name = family_name("sup0", family.iter().map(|(_, f)| f.name().to_string()));
    PartialMap::new(&name, doms.space.clone(), cod.clone(), table)
}

pub fn sup0(cod: &Arc<Space>, family: &TaggedFamily<TotalMap>) -> Result<TotalMap> {
    sup0_partial(cod, &family.map_items_tagged(|f| f.as_partial().clone()))?.into_total()
}

/// `↑P_i↑`: all `↑f_i↑` with `f_i ∈ P_i`.
pub fn sup0_problem(cod: &Arc<Space>, family: &TaggedFamily<Problem>, cap: usize) -> Result<Problem> {
    for (_, p) in family.iter() {
        common_cod(cod, p.cod())?;
    }
    let doms = coproduct_tagged(&family.map_items(|p| p.dom().clone()))?;
    let name = family_name("sup0", family.iter().map(|(_, p)| p.name().to_string()));
    let members = selections(family, cap, |choice| {
        sup0_partial(cod, &family.with_items(choice.iter().map(|m| (*m).clone()).collect()))
    })?;
    Problem::new(&name, doms.space.clone(), cod.clone(), members)
}

/// `↓f_i↓`: the common value on the subspace of the product where all
/// `f_i` agree. The empty family gives the greatest element, the identity
/// from the indiscrete copy of `cod`.
pub fn inf0(cod: &Arc<Space>, family: &TaggedFamily<TotalMap>) -> Result<TotalMap> {
    for (_, f) in family.iter() {
        common_cod(cod, f.cod())?;
    }
    if family.is_empty() {
        let top = Arc::new(cod.indiscrete_copy());
        return TotalMap::from_fn(&format!("inf0_{}", cod.name()), top, cod.clone(), |x| x);
    }
    let prod = product(&family.iter().map(|(_, f)| f.dom().clone()).collect::<Vec<_>>())?;
    let fibered: PointSet = (0..prod.space.len())
        .filter(|&p| {
            let coords = prod.coords(p);
            let mut values = coords.iter().zip(family.iter()).map(|(&x, (_, f))| f.value(x));
            let first = values.next().expect("nonempty family");
            values.all(|v| v == first)
        })
        .collect();
    let sub = subspace(&prod.space, &fibered)?;
    let first = &family.iter().next().expect("nonempty").1;
    let name = family_name("inf0", family.iter().map(|(_, f)| f.name().to_string()));
    let table = sub.inclusion.iter().map(|&p| first.value(prod.coords(p)[0])).collect();
    TotalMap::new(&name, sub.space.clone(), cod.clone(), table)
}

fn common_cod(cod: &Arc<Space>, found: &Arc<Space>) -> Result<()> {
    ensure_same(cod, found).map_err(|_| Error::CodomainMismatch {
        left: cod.name().to_string(),
        right: found.name().to_string(),
    })
}

/// Applies `build` to every selection of one member per problem.
fn selections<F>(family: &TaggedFamily<Problem>, cap: usize, mut build: F) -> Result<Vec<PartialMap>>
where
    F: FnMut(&[&PartialMap]) -> Result<PartialMap>,
{
    let count = family.iter().try_fold(1usize, |acc, (_, p)| acc.checked_mul(p.len()));
    if count.is_none_or(|c| c > cap) {
        return Err(Error::Capacity { what: "supremum members".into(), cap });
    }
    if count == Some(0) {
        return Ok(Vec::new());
    }
    let problems: Vec<&Problem> = family.iter().map(|(_, p)| p).collect();
    let mut choice = vec![0usize; problems.len()];
    let mut out = Vec::new();
    loop {
        let picked: Vec<&PartialMap> = problems.iter().zip(&choice).map(|(p, &c)| &p.members()[c]).collect();
        out.push(build(&picked)?);
        let mut k = problems.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < problems[k].len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

/// [`sup2_problem`] with the default member cap.
pub fn sup2_problem_default(family: &TaggedFamily<Problem>) -> Result<Problem> {
    sup2_problem(family, DEFAULT_MEMBER_CAP)
}
