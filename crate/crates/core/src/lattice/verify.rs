use crate::error::Result;
use crate::reduce::{Item, Reducer, Reducibility};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundViolation {
    /// `family[member]` is not below the candidate.
    NotUpperBound { member: usize },
    /// `pool[index]` bounds the family from above but the candidate is not below it.
    NotLeast { index: usize },
    /// The candidate is not below `family[member]`.
    NotLowerBound { member: usize },
    /// `pool[index]` bounds the family from below but is not below the candidate.
    NotGreatest { index: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundReport {
    pub violations: Vec<BoundViolation>,
}

impl BoundReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `candidate` is an upper bound of `family` and below every
/// upper bound found in `pool`. Least-ness is only relative to the pool.
pub fn verify_lub(
    candidate: &Item,
    family: &[Item],
    pool: &[Item],
    rel: Reducibility,
    reducer: &Reducer,
) -> Result<BoundReport> {
    let mut report = BoundReport::default();
    for (member, f) in family.iter().enumerate() {
        if reducer.reduces(f, candidate, rel)?.is_none() {
            report.violations.push(BoundViolation::NotUpperBound { member });
        }
    }
    for (index, z) in pool.iter().enumerate() {
        let bounds = family.iter().map(|f| Ok(reducer.reduces(f, z, rel)?.is_some())).collect::<Result<Vec<_>>>()?;
        if bounds.into_iter().all(|b| b) && reducer.reduces(candidate, z, rel)?.is_none() {
            report.violations.push(BoundViolation::NotLeast { index });
        }
    }
    Ok(report)
}

/// Dual of [`verify_lub`].
pub fn verify_glb(
    candidate: &Item,
    family: &[Item],
    pool: &[Item],
    rel: Reducibility,
    reducer: &Reducer,
) -> Result<BoundReport> {
    let mut report = BoundReport::default();
    for (member, f) in family.iter().enumerate() {
        if reducer.reduces(candidate, f, rel)?.is_none() {
            report.violations.push(BoundViolation::NotLowerBound { member });
        }
    }
    for (index, z) in pool.iter().enumerate() {
        let bounds = family.iter().map(|f| Ok(reducer.reduces(z, f, rel)?.is_some())).collect::<Result<Vec<_>>>()?;
        if bounds.into_iter().all(|b| b) && reducer.reduces(z, candidate, rel)?.is_none() {
            report.violations.push(BoundViolation::NotGreatest { index });
        }
    }
    Ok(report)
}
