//! Exact deciders for `≤₀`, `≤₂` and the capped truth-table reducibility,
//! each returning a replayable certificate.
//!
//! All searches enumerate candidates in lexicographic order of their tables
//! (undefined before defined, smaller point indices first), so the returned
//! witness is deterministic. A node budget turns intractable instances into
//! [`Error::BudgetExceeded`] instead of a wrong answer.

mod le0;
mod le2;
mod oracle;
pub(crate) mod search;
mod witness;

use std::fmt;

pub use witness::{Witness0, Witness2};

use crate::error::{Error, Result};
use crate::topo::{pi_power, Problem, TotalMap};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Entry point for all deciders; carries the search budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Reducer {
    pub budget: u64,
}

impl Default for Reducer {
    fn default() -> Self {
        Reducer { budget: DEFAULT_BUDGET }
    }
}

impl Reducer {
    pub fn new(budget: u64) -> Reducer {
        Reducer { budget }
    }

    /// Least `n <= cap` with `f ≤₂ gⁿ`.
    pub fn le_ct(&self, f: &TotalMap, g: &TotalMap, cap: usize) -> Result<CtVerdict> {
        if cap < 1 {
            return Err(Error::Precondition("le_ct needs cap >= 1".into()));
        }
        for n in 1..=cap {
            let power = if n == 1 { g.clone() } else { pi_power(g, n)? };
            if let Some(witness) = self.le2_fn(f, &power)? {
                return Ok(CtVerdict::Yes { power: n, witness });
            }
        }
        Ok(CtVerdict::NoUpToCap(cap))
    }

    /// Decides `a ⪯ b` for the given reducibility. Maps are lifted to
    /// singleton problems when compared with problems.
    pub fn reduces(&self, a: &Item, b: &Item, rel: Reducibility) -> Result<Option<Witness>> {
        match (rel, a, b) {
            (Reducibility::Le0, Item::Map(f), Item::Map(g)) => Ok(self.le0_fn(f, g)?.map(Witness::Zero)),
            (Reducibility::Le0, _, _) => Ok(self.le0_problem(&a.to_problem(), &b.to_problem())?.map(Witness::Zero)),
            (Reducibility::Le2, Item::Map(f), Item::Map(g)) => Ok(self.le2_fn(f, g)?.map(Witness::Two)),
            (Reducibility::Le2, _, _) => Ok(self.le2_problem(&a.to_problem(), &b.to_problem())?.map(Witness::Two)),
            (Reducibility::Lect(cap), Item::Map(f), Item::Map(g)) => Ok(match self.le_ct(f, g, cap)? {
                CtVerdict::Yes { power, witness } => Some(Witness::Ct { power, witness }),
                CtVerdict::NoUpToCap(_) => None,
            }),
            (Reducibility::Lect(_), _, _) => {
                Err(Error::Precondition("the truth-table reducibility is implemented for maps only".into()))
            }
        }
    }

    /// Runs both directions and classifies the pair.
    pub fn compare(&self, a: &Item, b: &Item, rel: Reducibility) -> Result<CompareResult> {
        let (forward, backward) = rayon::join(|| self.reduces(a, b, rel), || self.reduces(b, a, rel));
        let (forward, backward) = (forward?, backward?);
        let verdict = match (&forward, &backward) {
            (Some(_), Some(_)) => Verdict::Equivalent,
            (Some(_), None) => Verdict::LeftBelow,
            (None, Some(_)) => Verdict::RightBelow,
            (None, None) => Verdict::Incomparable,
        };
        Ok(CompareResult { verdict, forward, backward })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CtVerdict {
    Yes { power: usize, witness: Witness2 },
    NoUpToCap(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reducibility {
    Le0,
    Le2,
    /// `≤_ct` with the power capped.
    Lect(usize),
}

impl fmt::Display for Reducibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reducibility::Le0 => f.write_str("le0"),
            Reducibility::Le2 => f.write_str("le2"),
            Reducibility::Lect(cap) => write!(f, "lect({cap})"),
        }
    }
}

/// Something a reducibility compares: a total map or a problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Map(TotalMap),
    Problem(Problem),
}

impl Item {
    pub fn name(&self) -> &str {
        match self {
            Item::Map(f) => f.name(),
            Item::Problem(p) => p.name(),
        }
    }

    pub fn to_problem(&self) -> Problem {
        match self {
            Item::Map(f) => Problem::of_total(f),
            Item::Problem(p) => p.clone(),
        }
    }

    pub fn cod(&self) -> &std::sync::Arc<crate::topo::Space> {
        match self {
            Item::Map(f) => f.cod(),
            Item::Problem(p) => p.cod(),
        }
    }
}

impl From<TotalMap> for Item {
    fn from(f: TotalMap) -> Item {
        Item::Map(f)
    }
}

impl From<Problem> for Item {
    fn from(p: Problem) -> Item {
        Item::Problem(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Zero(Witness0),
    Two(Witness2),
    Ct { power: usize, witness: Witness2 },
}

impl Witness {
    /// Replays the certificate for `a ⪯ b`.
    pub fn verify(&self, a: &Item, b: &Item) -> Result<()> {
        match (self, a, b) {
            (Witness::Zero(w), Item::Map(f), Item::Map(g)) => w.verify_fn(f, g),
            (Witness::Zero(w), _, _) => w.verify_problem(&a.to_problem(), &b.to_problem()),
            (Witness::Two(w), Item::Map(f), Item::Map(g)) => w.verify_fn(f, g),
            (Witness::Two(w), _, _) => w.verify_problem(&a.to_problem(), &b.to_problem()),
            (Witness::Ct { power, witness }, Item::Map(f), Item::Map(g)) => {
                let target = if *power == 1 { g.clone() } else { pi_power(g, *power)? };
                witness.verify_fn(f, &target)
            }
            (Witness::Ct { .. }, _, _) => Err(Error::InvalidWitness("truth-table witness for a problem".into())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Equivalent,
    LeftBelow,
    RightBelow,
    Incomparable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompareResult {
    pub verdict: Verdict,
    /// Witness for `a ⪯ b`, when it holds.
    pub forward: Option<Witness>,
    /// Witness for `b ⪯ a`, when it holds.
    pub backward: Option<Witness>,
}

/// [`Reducer::le0_fn`] with the default budget.
pub fn le0_fn(f: &TotalMap, g: &TotalMap) -> Result<Option<Witness0>> {
    Reducer::default().le0_fn(f, g)
}

pub fn le0_problem(p: &Problem, q: &Problem) -> Result<Option<Witness0>> {
    Reducer::default().le0_problem(p, q)
}

pub fn le2_fn(f: &TotalMap, g: &TotalMap) -> Result<Option<Witness2>> {
    Reducer::default().le2_fn(f, g)
}

pub fn le2_fn_oracle(f: &TotalMap, g: &TotalMap) -> Result<Option<Witness2>> {
    Reducer::default().le2_fn_oracle(f, g)
}

pub fn le2_problem(p: &Problem, q: &Problem) -> Result<Option<Witness2>> {
    Reducer::default().le2_problem(p, q)
}

pub fn le_ct(f: &TotalMap, g: &TotalMap, cap: usize) -> Result<CtVerdict> {
    Reducer::default().le_ct(f, g, cap)
}

pub fn compare(a: &Item, b: &Item, rel: Reducibility) -> Result<CompareResult> {
    Reducer::default().compare(a, b, rel)
}
