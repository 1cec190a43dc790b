use std::collections::BTreeSet;
use std::sync::Arc;

use super::map::{PartialMap, TotalMap};
use super::space::{check_name, ensure_same, same_space, PointSet, Space, Subspace};
use crate::error::{Error, Result};

/// Default cap on the number of members materialized by a construction.
pub const DEFAULT_MEMBER_CAP: usize = 10_000;

/// A finite set of partial maps sharing domain and codomain.
///
/// Members are kept sorted by table and deduplicated, so two problems with
/// the same members compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    name: String,
    dom: Arc<Space>,
    cod: Arc<Space>,
    members: Vec<PartialMap>,
}

impl Problem {
    pub fn new(name: &str, dom: Arc<Space>, cod: Arc<Space>, members: Vec<PartialMap>) -> Result<Problem> {
        check_name(name)?;
        for m in &members {
            ensure_same(&dom, m.dom())?;
            ensure_same(&cod, m.cod())?;
        }
        let mut members = members;
        members.sort_by(|a, b| a.table().cmp(b.table()));
        members.dedup_by(|a, b| a.table() == b.table());
        Ok(Problem { name: name.to_string(), dom, cod, members })
    }

    /// The problem `∅` with no members.
    pub fn empty(name: &str, dom: Arc<Space>, cod: Arc<Space>) -> Result<Problem> {
        Problem::new(name, dom, cod, Vec::new())
    }

    pub fn singleton(f: &PartialMap) -> Problem {
        Problem {
            name: f.name().to_string(),
            dom: f.dom().clone(),
            cod: f.cod().clone(),
            members: vec![f.clone()],
        }
    }

    pub fn of_total(f: &TotalMap) -> Problem {
        Problem::singleton(f.as_partial())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dom(&self) -> &Arc<Space> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<Space> {
        &self.cod
    }

    pub fn members(&self) -> &[PartialMap] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Membership up to [`map_equal`](super::map_equal).
    pub fn contains(&self, f: &PartialMap) -> bool {
        same_space(&self.dom, f.dom())
            && same_space(&self.cod, f.cod())
            && self.members.iter().any(|m| m.table() == f.table())
    }

    pub fn renamed(&self, name: &str) -> Result<Problem> {
        check_name(name)?;
        Ok(Problem { name: name.to_string(), ..self.clone() })
    }
}

/// A finite relation, identified with the problem of its choice functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    name: String,
    dom: Arc<Space>,
    cod: Arc<Space>,
    pairs: BTreeSet<(usize, usize)>,
}

impl Relation {
    pub fn new(name: &str, dom: Arc<Space>, cod: Arc<Space>, pairs: BTreeSet<(usize, usize)>) -> Result<Relation> {
        check_name(name)?;
        if let Some(&(x, y)) = pairs.iter().find(|&&(x, y)| x >= dom.len() || y >= cod.len()) {
            let (space, index) = if x >= dom.len() { (dom.name(), x) } else { (cod.name(), y) };
            return Err(Error::PointOutOfRange { space: space.to_string(), index });
        }
        Ok(Relation { name: name.to_string(), dom, cod, pairs })
    }

    pub fn from_rows<S: AsRef<str>>(name: &str, dom: Arc<Space>, cod: Arc<Space>, rows: &[(S, S)]) -> Result<Relation> {
        let pairs = rows
            .iter()
            .map(|(x, y)| Ok((dom.require(x.as_ref())?, cod.require(y.as_ref())?)))
            .collect::<Result<_>>()?;
        Relation::new(name, dom, cod, pairs)
    }

    /// The graph of a partial map.
    pub fn graph(f: &PartialMap) -> Relation {
        let pairs = f.table().iter().enumerate().filter_map(|(x, v)| v.map(|y| (x, y))).collect();
        Relation { name: f.name().to_string(), dom: f.dom().clone(), cod: f.cod().clone(), pairs }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dom(&self) -> &Arc<Space> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<Space> {
        &self.cod
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    /// Points with at least one related value.
    pub fn domain(&self) -> PointSet {
        self.pairs.iter().map(|&(x, _)| x).collect()
    }

    pub fn values_at(&self, x: usize) -> Vec<usize> {
        self.pairs.range((x, 0)..=(x, usize::MAX)).map(|&(_, y)| y).collect()
    }

    /// The relation on a subspace: pairs whose first point lies in it.
    pub fn on_subspace(&self, sub: &Subspace) -> Result<Relation> {
        ensure_same(&self.dom, &sub.parent)?;
        let pairs = self.pairs.iter().filter_map(|&(x, y)| sub.local(x).map(|lx| (lx, y))).collect();
        Relation::new(&self.name, sub.space.clone(), self.cod.clone(), pairs)
    }

    /// All choice functions, defined exactly on [`Relation::domain`].
    ///
    /// The empty relation yields the problem containing only the nowhere
    /// defined map.
    pub fn choice_functions(&self, cap: usize) -> Result<Problem> {
        let dom_points: Vec<usize> = self.domain().into_iter().collect();
        let options: Vec<Vec<usize>> = dom_points.iter().map(|&x| self.values_at(x)).collect();
        let count = options.iter().try_fold(1usize, |acc, o| acc.checked_mul(o.len()));
        match count {
            Some(c) if c <= cap => {}
            _ => return Err(Error::Capacity { what: format!("choice functions of `{}`", self.name), cap }),
        }
        let mut members = Vec::new();
        let mut choice = vec![0usize; options.len()];
        loop {
            let mut table = vec![None; self.dom.len()];
            for (k, &x) in dom_points.iter().enumerate() {
                table[x] = Some(options[k][choice[k]]);
            }
            let name = format!("{}.c{}", self.name, members.len());
            members.push(PartialMap::new(&name, self.dom.clone(), self.cod.clone(), table)?);
            // odometer, last position fastest
            let mut k = options.len();
            loop {
                if k == 0 {
                    return Problem::new(&self.name, self.dom.clone(), self.cod.clone(), members);
                }
                k -= 1;
                choice[k] += 1;
                if choice[k] < options[k].len() {
                    break;
                }
                choice[k] = 0;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spaces() -> (Arc<Space>, Arc<Space>) {
        let x = Arc::new(Space::build("X", &["a", "b"], &[]).unwrap());
        (x, Arc::new(Space::discrete(2)))
    }

    #[test]
    fn two_choices() {
        let (x, y) = spaces();
        let r = Relation::from_rows("R", x, y, &[("a", "0"), ("a", "1")]).unwrap();
        let p = r.choice_functions(DEFAULT_MEMBER_CAP).unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.members().iter().all(|m| m.defined_on().len() == 1));
    }

    #[test]
    fn empty_relation_gives_nowhere_defined_map() {
        let (x, y) = spaces();
        let r = Relation::new("R", x, y, BTreeSet::new()).unwrap();
        let p = r.choice_functions(DEFAULT_MEMBER_CAP).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.members()[0].is_nowhere_defined());
    }

    #[test]
    fn function_graph_gives_singleton() {
        let (x, y) = spaces();
        let f = PartialMap::new("f", x, y, vec![Some(0), Some(1)]).unwrap();
        let p = Relation::graph(&f).choice_functions(DEFAULT_MEMBER_CAP).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.contains(&f));
    }

    #[test]
    fn capacity_is_explicit() {
        let x = Arc::new(Space::discrete(4));
        let y = Arc::new(Space::discrete(3));
        let pairs = (0..4).flat_map(|a| (0..3).map(move |b| (a, b))).collect();
        let r = Relation::new("R", x, y, pairs).unwrap();
        assert_eq!(r.choice_functions(81).unwrap().len(), 81);
        assert!(matches!(r.choice_functions(80), Err(Error::Capacity { .. })));
    }

    #[test]
    fn empty_problem_and_nowhere_problem_differ() {
        let (x, y) = spaces();
        let empty = Problem::empty("E", x.clone(), y.clone()).unwrap();
        let nowhere = Problem::singleton(&PartialMap::nowhere("n", x, y).unwrap());
        assert!(empty.is_empty());
        assert_eq!(nowhere.len(), 1);
    }

    #[test]
    fn members_must_share_spaces() {
        let (x, y) = spaces();
        let other = Arc::new(Space::chain(2));
        let f = PartialMap::nowhere("f", x.clone(), other).unwrap();
        assert!(Problem::new("P", x, y, vec![f]).is_err());
    }
}
