use crate::error::{Error, Result};

/// Counts candidate extensions and fails once the budget is spent.
#[derive(Debug)]
pub(crate) struct Counter {
    nodes: u64,
    budget: u64,
}

impl Counter {
    pub(crate) fn new(budget: u64) -> Counter {
        Counter { nodes: 0, budget }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(Error::BudgetExceeded { budget: self.budget })
        } else {
            Ok(())
        }
    }
}

/// A binary constraint problem whose variables are the points of a space and
/// whose constraints only link comparable points. Independent groups of
/// points are solved separately, which keeps the search linear in the number
/// of groups instead of multiplicative.
pub(crate) struct PointCsp<'a> {
    pub candidates: Vec<Vec<Option<usize>>>,
    /// `compatible(x, vx, y, vy)` for an earlier assigned point `y`.
    pub compatible: &'a dyn Fn(usize, Option<usize>, usize, Option<usize>) -> bool,
}

impl PointCsp<'_> {
    /// Lexicographically least solution, trying candidates in the given order.
    pub(crate) fn solve(&self, groups: &[Vec<usize>], counter: &mut Counter) -> Result<Option<Vec<Option<usize>>>> {
        let mut assignment = vec![None; self.candidates.len()];
        for group in groups {
            if !self.solve_group(group, 0, &mut assignment, counter)? {
                return Ok(None);
            }
        }
        Ok(Some(assignment))
    }

    fn solve_group(
        &self,
        group: &[usize],
        depth: usize,
        assignment: &mut [Option<usize>],
        counter: &mut Counter,
    ) -> Result<bool> {
        let Some(&x) = group.get(depth) else {
            return Ok(true);
        };
        for &v in &self.candidates[x] {
            counter.tick()?;
            if group[..depth].iter().all(|&y| (self.compatible)(x, v, y, assignment[y])) {
                assignment[x] = v;
                if self.solve_group(group, depth + 1, assignment, counter)? {
                    return Ok(true);
                }
            }
        }
        assignment[x] = None;
        Ok(false)
    }
}
