use std::sync::Arc;

use super::{sup2, sup2_problem, TaggedFamily};
use crate::error::{Error, Result};
use crate::reduce::{Reducer, Witness2};
use crate::topo::{subspace, PointSet, Relation, Space, TotalMap};

/// The parts of `f` obtained from a witness for `f ≤₂ ⌈g_i⌉`.
#[derive(Clone, Debug)]
pub struct Distribution {
    /// `O_i`: points whose `G`-image lies in component `i`.
    pub blocks: Vec<PointSet>,
    /// `f_i`: `f` restricted to `O_i`, as a total map on that subspace.
    pub parts: Vec<TotalMap>,
    /// Certificates for `f_i ≤₂ g_i`.
    pub part_witnesses: Vec<Witness2>,
    /// Certificate for `f ≤₂ ⌈f_i⌉`.
    pub to_sup: Witness2,
    /// Certificate for `⌈f_i⌉ ≤₂ f`.
    pub from_sup: Witness2,
}

/// Splits `f` along a witness for `f ≤₂ ⌈g_i⌉` into `f_i ≤₂ g_i` with
/// `f ≡₂ ⌈f_i⌉`. The clopen blocks and all three reductions are checked
/// before returning.
pub fn distribute2(
    f: &TotalMap,
    family: &TaggedFamily<TotalMap>,
    witness: &Witness2,
    reducer: &Reducer,
) -> Result<Distribution> {
    let sup = sup2(family)?;
    witness.verify_fn(f, &sup)?;
    let x = f.dom();
    let offsets = component_offsets(family.items().map(|g| g.dom().len()));
    let blocks = blocks_of(x.len(), &offsets, |p| witness.g.apply(p));
    check_clopen(x, &blocks)?;
    let parts: Vec<TotalMap> = blocks
        .iter()
        .enumerate()
        .map(|(i, block)| f.on_subspace(&subspace(x, block)?)?.renamed(&format!("{}|{i}", f.name())))
        .collect::<Result<_>>()?;
    let part_witnesses = parts
        .iter()
        .zip(family.items())
        .map(|(part, g)| {
            reducer.le2_fn(part, g)?.ok_or_else(|| broken(&format!("{} is not below {}", part.name(), g.name())))
        })
        .collect::<Result<_>>()?;
    let joined = sup2(&family.with_items(parts.clone()))?;
    let to_sup = reducer.le2_fn(f, &joined)?.ok_or_else(|| broken("f is not below the supremum of its parts"))?;
    let from_sup = reducer.le2_fn(&joined, f)?.ok_or_else(|| broken("the supremum of the parts is not below f"))?;
    Ok(Distribution { blocks, parts, part_witnesses, to_sup, from_sup })
}

/// The relation version of [`Distribution`].
#[derive(Clone, Debug)]
pub struct RelationDistribution {
    pub blocks: Vec<PointSet>,
    pub parts: Vec<Relation>,
}

/// Splits a relation `R` along a witness for `R ≤₂ ⌈S_i⌉` (all read as
/// choice-function problems). Blocks are clopen in the domain of `G`; each
/// part is `R` restricted to its block. Choice functions are local, so the
/// parts recombine to `R`.
pub fn distribute2_relation(
    r: &Relation,
    family: &TaggedFamily<Relation>,
    witness: &Witness2,
    reducer: &Reducer,
    cap: usize,
) -> Result<RelationDistribution> {
    let p = r.choice_functions(cap)?;
    let qs: Vec<_> = family.items().map(|s| s.choice_functions(cap)).collect::<Result<_>>()?;
    let q = sup2_problem(&family.with_items(qs.clone()), cap)?;
    witness.verify_problem(&p, &q)?;
    let x = r.dom();
    let offsets = component_offsets(family.items().map(|s| s.dom().len()));
    let blocks = blocks_of(x.len(), &offsets, |pt| witness.g.apply(pt));
    let defined = subspace(x, &witness.g.defined_on())?;
    let local_blocks: Vec<PointSet> =
        blocks.iter().map(|b| b.iter().filter_map(|&pt| defined.local(pt)).collect()).collect();
    check_clopen(&defined.space, &local_blocks)?;
    let parts: Vec<Relation> = blocks
        .iter()
        .enumerate()
        .map(|(i, block)| {
            let rel = r.on_subspace(&subspace(x, block)?)?;
            Relation::new(&format!("{}|{i}", r.name()), rel.dom().clone(), rel.cod().clone(), rel.pairs().clone())
        })
        .collect::<Result<_>>()?;
    let part_problems: Vec<_> = parts.iter().map(|s| s.choice_functions(cap)).collect::<Result<_>>()?;
    for (part, q_i) in part_problems.iter().zip(&qs) {
        if reducer.le2_problem(part, q_i)?.is_none() {
            return Err(broken(&format!("{} is not below {}", part.name(), q_i.name())));
        }
    }
    let joined = sup2_problem(&family.with_items(part_problems), cap)?;
    if reducer.le2_problem(&p, &joined)?.is_none() || reducer.le2_problem(&joined, &p)?.is_none() {
        return Err(broken("the relation is not equivalent to the supremum of its parts"));
    }
    Ok(RelationDistribution { blocks, parts })
}

fn broken(what: &str) -> Error {
    Error::InvalidWitness(format!("distribution check failed: {what}"))
}

fn component_offsets(sizes: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut offsets = vec![0];
    for s in sizes {
        offsets.push(offsets.last().expect("nonempty") + s);
    }
    offsets
}

fn blocks_of(n: usize, offsets: &[usize], g: impl Fn(usize) -> Option<usize>) -> Vec<PointSet> {
    let mut blocks = vec![PointSet::new(); offsets.len() - 1];
    for p in 0..n {
        if let Some(target) = g(p) {
            let i = offsets.partition_point(|&o| o <= target) - 1;
            blocks[i].insert(p);
        }
    }
    blocks
}

fn check_clopen(space: &Arc<Space>, blocks: &[PointSet]) -> Result<()> {
    for b in blocks {
        if !space.is_open(b)? || !space.is_closed(b)? {
            return Err(broken("a block is not clopen"));
        }
    }
    Ok(())
}
