use crate::error::{Error, Result};
use crate::invariants::{level_sets, Variant};
use crate::lattice::{sup2, TaggedFamily};
use crate::reduce::{Reducer, Witness2};
use crate::topo::{subspace, PointSet, TotalMap};

/// Result of splitting `f` by its second-level sets.
#[derive(Clone, Debug)]
pub struct LevelDecomposition {
    /// `L_n = ℒ²_{t_n}(f)` for each threshold `t_n`.
    pub level_sets: Vec<PointSet>,
    /// `f_n = f` restricted to the complement of `L_n`.
    pub parts: Vec<TotalMap>,
    pub sup: TotalMap,
    /// `⌈f_n⌉ ≤₂ f`, which always holds.
    pub below: Witness2,
    /// `f ≤₂ ⌈f_n⌉`, if it holds on this instance.
    pub above: Option<Witness2>,
}

impl LevelDecomposition {
    pub fn equivalent(&self) -> bool {
        self.above.is_some()
    }
}

/// Restricts `f` to the complements of its level sets at the given
/// ascending thresholds and tests whether `f` is equivalent to the
/// supremum of the restrictions.
pub fn decompose_by_level(f: &TotalMap, thresholds: &[usize], reducer: &Reducer) -> Result<LevelDecomposition> {
    if thresholds.is_empty() {
        return Err(Error::Precondition("at least one threshold is required".into()));
    }
    if thresholds.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Precondition("thresholds must ascend".into()));
    }
    let chain = level_sets(f, Variant::Two);
    let x = f.dom();
    let mut level = Vec::new();
    let mut parts = Vec::new();
    for (n, &t) in thresholds.iter().enumerate() {
        let l = chain.stage(t).clone();
        let rest: PointSet = x.all_points().difference(&l).copied().collect();
        parts.push(f.on_subspace(&subspace(x, &rest)?)?.renamed(&format!("{}_{n}", f.name()))?);
        level.push(l);
    }
    let sup = sup2(&TaggedFamily::indexed(parts.iter().cloned()))?;
    let below = reducer
        .le2_fn(&sup, f)?
        .ok_or_else(|| Error::InvalidWitness("supremum of restrictions is not below the map".into()))?;
    let above = reducer.le2_fn(f, &sup)?;
    Ok(LevelDecomposition { level_sets: level, parts, sup, below, above })
}
