use std::fmt;

use crate::error::{Error, Result};
use crate::topo::{PartialMap, PointSet};

/// A Level: a natural number or `Unbounded`, which lies above every natural.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LevelValue {
    Finite(usize),
    Unbounded,
}

impl LevelValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            LevelValue::Finite(n) => Some(n),
            LevelValue::Unbounded => None,
        }
    }

    pub fn is_unbounded(self) -> bool {
        self == LevelValue::Unbounded
    }
}

impl From<usize> for LevelValue {
    fn from(n: usize) -> Self {
        LevelValue::Finite(n)
    }
}

impl fmt::Display for LevelValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LevelValue::Finite(n) => write!(f, "{n}"),
            LevelValue::Unbounded => f.write_str("unbounded"),
        }
    }
}

/// Which Level: `One` removes the discontinuity points, `Two` additionally
/// takes their closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    One,
    Two,
}

/// `ℒ_0 ⊋ ℒ_1 ⊋ ... ⊋ ℒ_k`. When `terminates` is set the last set is empty;
/// otherwise it is a nonempty fixed point and every later stage equals it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelChain {
    pub sets: Vec<PointSet>,
    pub terminates: bool,
}

impl LevelChain {
    pub fn level(&self) -> LevelValue {
        if self.terminates {
            LevelValue::Finite(self.sets.len() - 1)
        } else {
            LevelValue::Unbounded
        }
    }

    /// Least stage not containing `x`.
    pub fn lev_point(&self, x: usize) -> LevelValue {
        match self.sets.iter().position(|s| !s.contains(&x)) {
            Some(i) => LevelValue::Finite(i),
            None => LevelValue::Unbounded,
        }
    }

    /// `ℒ_α` for any stage, repeating the fixed point past the end.
    pub fn stage(&self, alpha: usize) -> &PointSet {
        &self.sets[alpha.min(self.sets.len() - 1)]
    }
}

/// Points of `set` at which `f` restricted to `set` is discontinuous.
pub fn discontinuity_points(f: &PartialMap, set: &PointSet) -> PointSet {
    let x = f.dom();
    let y = f.cod();
    set.iter()
        .copied()
        .filter(|&p| {
            let fp = f.apply(p).expect("level sets lie in the domain");
            set.iter().any(|&q| x.is_below(p, q) && !y.is_below(fp, f.apply(q).expect("defined")))
        })
        .collect()
}

/// The level chain of `f`, computed on the subspace where `f` is defined.
/// Every stage is a subset of the previous one, so the chain reaches the
/// empty set or a fixed point after at most `|dom| + 1` stages.
pub fn level_sets(f: &PartialMap, variant: Variant) -> LevelChain {
    let defined = f.defined_on();
    let mut sets = vec![defined.clone()];
    loop {
        let current = sets.last().expect("nonempty chain");
        if current.is_empty() {
            return LevelChain { sets, terminates: true };
        }
        let bad = discontinuity_points(f, current);
        let next = match variant {
            Variant::One => bad,
            Variant::Two => {
                let closed = f.dom().closure(&bad).expect("points of the domain");
                closed.intersection(&defined).copied().collect()
            }
        };
        if &next == current {
            return LevelChain { sets, terminates: false };
        }
        debug_assert!(next.is_subset(current));
        sets.push(next);
    }
}

/// `lev^i(f, x)`; fails when `f` is undefined at `x`.
pub fn lev_point(f: &PartialMap, x: usize, variant: Variant) -> Result<LevelValue> {
    if x >= f.dom().len() {
        return Err(Error::PointOutOfRange { space: f.dom().name().to_string(), index: x });
    }
    if f.apply(x).is_none() {
        return Err(Error::Undefined { map: f.name().to_string(), point: f.dom().point(x).to_string() });
    }
    Ok(level_sets(f, variant).lev_point(x))
}

/// `Lev^i(f)`.
pub fn level(f: &PartialMap, variant: Variant) -> LevelValue {
    level_sets(f, variant).level()
}
