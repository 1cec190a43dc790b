//! Level sets, the Levels `Lev¹`/`Lev²` and Basesize, for maps and problems.
//!
//! Partial maps are measured on the subspace where they are defined.

mod coloring;
mod level;

pub use coloring::{basesize, basesize_coloring, conflict_graph, Coloring};
pub use level::{discontinuity_points, lev_point, level, level_sets, LevelChain, LevelValue, Variant};

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::topo::{PartialMap, Problem};

/// Everything measured about one map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub level_sets_1: LevelChain,
    pub level_sets_2: LevelChain,
    pub lev1: LevelValue,
    pub lev2: LevelValue,
    /// `(lev¹(f, x), lev²(f, x))` for every defined `x`.
    pub pointwise: BTreeMap<usize, (LevelValue, LevelValue)>,
    pub bas: usize,
    pub coloring: Coloring,
    pub conflict_edges: BTreeSet<(usize, usize)>,
}

pub fn report(f: &PartialMap) -> InvariantReport {
    let level_sets_1 = level_sets(f, Variant::One);
    let level_sets_2 = level_sets(f, Variant::Two);
    let pointwise =
        f.defined_on().into_iter().map(|x| (x, (level_sets_1.lev_point(x), level_sets_2.lev_point(x)))).collect();
    let coloring = basesize_coloring(f);
    InvariantReport {
        lev1: level_sets_1.level(),
        lev2: level_sets_2.level(),
        level_sets_1,
        level_sets_2,
        pointwise,
        bas: coloring.count,
        coloring,
        conflict_edges: conflict_graph(f),
    }
}

/// `Lev^i(P)`, the least Level of a member. `Unbounded` for the empty problem.
pub fn level_problem(p: &Problem, variant: Variant) -> LevelValue {
    p.members().par_iter().map(|f| level(f, variant)).min().unwrap_or(LevelValue::Unbounded)
}

/// `bas(P)`, the least Basesize of a member. `Unbounded` for the empty problem.
pub fn basesize_problem(p: &Problem) -> LevelValue {
    p.members().par_iter().map(|f| LevelValue::Finite(basesize(f))).min().unwrap_or(LevelValue::Unbounded)
}
