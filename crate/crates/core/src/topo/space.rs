use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A set of point indices of one space.
pub type PointSet = BTreeSet<usize>;

/// A finite topological space stored as its specialization preorder.
///
/// `x` is below `y` iff `x` lies in the closure of `{y}`. Open sets are the
/// up-sets of this preorder, closed sets are the down-sets, and a map is
/// continuous iff it is monotone. The relation is kept reflexive and
/// transitive but need not be antisymmetric, so non-T0 spaces such as the
/// indiscrete ones are representable.
#[derive(Clone)]
pub struct Space {
    name: String,
    points: Vec<String>,
    index: HashMap<String, usize>,
    below: Vec<bool>,
}

pub(crate) fn check_name(name: &str) -> Result<()> {
    if name.is_empty() || name == "->" || name.contains('#') || name.chars().any(char::is_whitespace)
    {
        return Err(Error::InvalidName(name.to_string()));
    }
    Ok(())
}

impl Space {
    /// Builds a space from point names and declared `(x, y)` pairs meaning
    /// "x below y". The reflexive-transitive closure is applied.
    pub fn build<S: AsRef<str>>(name: &str, points: &[S], below: &[(S, S)]) -> Result<Space> {
        let points: Vec<String> = points.iter().map(|p| p.as_ref().to_string()).collect();
        let mut space = Space::with_points(name, points, Vec::new())?;
        let n = space.len();
        for (x, y) in below {
            let xi = space.require(x.as_ref())?;
            let yi = space.require(y.as_ref())?;
            space.below[xi * n + yi] = true;
        }
        space.close();
        Ok(space)
    }

    /// Builds a space from point names and index pairs, then closes the relation.
    pub fn from_index_pairs(
        name: &str,
        points: Vec<String>,
        below: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Space> {
        let mut space = Space::with_points(name, points, Vec::new())?;
        let n = space.len();
        for (x, y) in below {
            if x >= n || y >= n {
                return Err(Error::PointOutOfRange { space: space.name.clone(), index: x.max(y) });
            }
            space.below[x * n + y] = true;
        }
        space.close();
        Ok(space)
    }

    fn with_points(name: &str, points: Vec<String>, below: Vec<bool>) -> Result<Space> {
        check_name(name)?;
        let mut index = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            check_name(p)?;
            if index.insert(p.clone(), i).is_some() {
                return Err(Error::DuplicatePoint { space: name.to_string(), point: p.clone() });
            }
        }
        let n = points.len();
        let below = if below.is_empty() { vec![false; n * n] } else { below };
        Ok(Space { name: name.to_string(), points, index, below })
    }

    /// Assembles a space whose relation is already a preorder.
    pub(crate) fn from_closed(name: String, points: Vec<String>, below: Vec<bool>) -> Space {
        let space = Space::with_points(&name, points, below).expect("derived space names are valid");
        debug_assert!(space.is_preorder());
        space
    }

    fn close(&mut self) {
        let n = self.len();
        for i in 0..n {
            self.below[i * n + i] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if self.below[i * n + k] {
                    for j in 0..n {
                        if self.below[k * n + j] {
                            self.below[i * n + j] = true;
                        }
                    }
                }
            }
        }
    }

    pub(crate) fn is_preorder(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| self.below[i * n + i])
            && (0..n).all(|i| {
                (0..n).all(|j| {
                    !self.below[i * n + j] || (0..n).all(|k| !self.below[j * n + k] || self.below[i * n + k])
                })
            })
    }

    pub fn discrete(n: usize) -> Space {
        Space::from_closed(format!("D{n}"), numbered(n), identity_relation(n))
    }

    pub fn indiscrete(n: usize) -> Space {
        Space::from_closed(format!("I{n}"), numbered(n), vec![true; n * n])
    }

    /// The two-point space `S2` with `s0` below `s1`, so `{s1}` is the only
    /// nontrivial open set.
    pub fn sierpinski() -> Space {
        Space::build("S2", &["s0", "s1"], &[("s0", "s1")]).expect("valid")
    }

    /// Points `0 < 1 < ... < n-1`; point `i` is below point `j` iff `i <= j`.
    pub fn chain(n: usize) -> Space {
        let mut below = vec![false; n * n];
        for i in 0..n {
            for j in i..n {
                below[i * n + j] = true;
            }
        }
        Space::from_closed(format!("C{n}"), numbered(n), below)
    }

    pub fn empty(name: &str) -> Result<Space> {
        Space::with_points(name, Vec::new(), Vec::new())
    }

    /// Same points with the indiscrete topology.
    pub fn indiscrete_copy(&self) -> Space {
        let n = self.len();
        Space::from_closed(format!("ind({})", self.name), self.points.clone(), vec![true; n * n])
    }

    pub fn renamed(&self, name: &str) -> Result<Space> {
        check_name(name)?;
        let mut s = self.clone();
        s.name = name.to_string();
        Ok(s)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &str {
        &self.points[i]
    }

    pub fn index_of(&self, point: &str) -> Option<usize> {
        self.index.get(point).copied()
    }

    pub(crate) fn require(&self, point: &str) -> Result<usize> {
        self.index_of(point).ok_or_else(|| Error::UnknownPoint {
            space: self.name.clone(),
            point: point.to_string(),
        })
    }

    pub(crate) fn check_set(&self, set: &PointSet) -> Result<()> {
        match set.iter().find(|&&p| p >= self.len()) {
            Some(&p) => Err(Error::PointOutOfRange { space: self.name.clone(), index: p }),
            None => Ok(()),
        }
    }

    /// Resolves point names to a point set.
    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<PointSet> {
        names.iter().map(|n| self.require(n.as_ref())).collect()
    }

    pub fn names_of(&self, set: &PointSet) -> Vec<&str> {
        set.iter().map(|&p| self.point(p)).collect()
    }

    pub fn all_points(&self) -> PointSet {
        (0..self.len()).collect()
    }

    #[inline]
    pub fn is_below(&self, x: usize, y: usize) -> bool {
        self.below[x * self.points.len() + y]
    }

    /// Non-reflexive pairs of the relation, in index order.
    pub fn below_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |x| (0..n).filter(move |&y| x != y && self.is_below(x, y)).map(move |y| (x, y)))
    }

    /// The smallest open set containing `x`.
    pub fn up_set(&self, x: usize) -> PointSet {
        (0..self.len()).filter(|&y| self.is_below(x, y)).collect()
    }

    /// `cl{x}`.
    pub fn down_set(&self, x: usize) -> PointSet {
        (0..self.len()).filter(|&y| self.is_below(y, x)).collect()
    }

    /// The smallest closed set containing `set`: its down-closure.
    pub fn closure(&self, set: &PointSet) -> Result<PointSet> {
        self.check_set(set)?;
        Ok((0..self.len()).filter(|&y| set.iter().any(|&x| self.is_below(y, x))).collect())
    }

    pub fn is_open(&self, set: &PointSet) -> Result<bool> {
        self.check_set(set)?;
        Ok(set.iter().all(|&x| (0..self.len()).all(|y| !self.is_below(x, y) || set.contains(&y))))
    }

    pub fn is_closed(&self, set: &PointSet) -> Result<bool> {
        self.check_set(set)?;
        Ok(set.iter().all(|&x| (0..self.len()).all(|y| !self.is_below(y, x) || set.contains(&y))))
    }

    /// Enumerates the whole topology. Exponential in the number of points;
    /// meant for definitional cross-checks on small spaces.
    pub fn open_sets(&self) -> Vec<PointSet> {
        let n = self.len();
        assert!(n <= 20, "open_sets enumerates 2^n subsets");
        (0u32..1 << n)
            .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect::<PointSet>())
            .filter(|s| self.is_open(s).unwrap_or(false))
            .collect()
    }

    /// Connected components of the comparability graph, each sorted, ordered by
    /// their least point.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for y in 0..n {
                    if comp[y] == usize::MAX && (self.is_below(x, y) || self.is_below(y, x)) {
                        comp[y] = id;
                        members.push(y);
                        stack.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }
}

pub(crate) fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn identity_relation(n: usize) -> Vec<bool> {
    let mut below = vec![false; n * n];
    for i in 0..n {
        below[i * n + i] = true;
    }
    below
}

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.points == other.points && self.below == other.below
    }
}

impl Eq for Space {}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<_> = self.below_pairs().map(|(x, y)| format!("{}<{}", self.point(x), self.point(y))).collect();
        f.debug_struct("Space")
            .field("name", &self.name)
            .field("points", &self.points)
            .field("below", &pairs)
            .finish()
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

pub(crate) fn same_space(a: &Arc<Space>, b: &Arc<Space>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn ensure_same(expected: &Arc<Space>, found: &Arc<Space>) -> Result<()> {
    if same_space(expected, found) {
        Ok(())
    } else {
        Err(Error::SpaceMismatch { expected: expected.name.clone(), found: found.name.clone() })
    }
}

/// A coproduct together with its injections. Points are laid out component by
/// component; the point of component `i` coming from `x` is named `i.x`.
#[derive(Clone, Debug)]
pub struct Coproduct {
    pub space: Arc<Space>,
    offsets: Vec<usize>,
    factors: Vec<Arc<Space>>,
}

impl Coproduct {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn offset(&self, i: usize) -> usize {
        self.offsets[i]
    }

    pub fn factor(&self, i: usize) -> &Arc<Space> {
        &self.factors[i]
    }

    /// `(component, local point)` of a coproduct point.
    pub fn component_of(&self, p: usize) -> (usize, usize) {
        let i = self.offsets.partition_point(|&o| o <= p) - 1;
        (i, p - self.offsets[i])
    }

    pub fn inject(&self, i: usize, x: usize) -> usize {
        self.offsets[i] + x
    }

    pub fn injection(&self, i: usize) -> super::TotalMap {
        let table = (0..self.factors[i].len()).map(|x| self.inject(i, x)).collect();
        super::TotalMap::new(&format!("inj{i}"), self.factors[i].clone(), self.space.clone(), table)
            .expect("injection is well typed")
    }

    pub fn injections(&self) -> Vec<super::TotalMap> {
        (0..self.len()).map(|i| self.injection(i)).collect()
    }
}

/// Coproduct with index tags `0, 1, ...`.
pub fn coproduct(spaces: &[Arc<Space>]) -> Coproduct {
    let tagged: Vec<(String, Arc<Space>)> =
        spaces.iter().enumerate().map(|(i, s)| (i.to_string(), s.clone())).collect();
    coproduct_tagged(&tagged).expect("index tags are distinct")
}

pub fn coproduct_tagged(spaces: &[(String, Arc<Space>)]) -> Result<Coproduct> {
    let mut seen = BTreeSet::new();
    for (tag, _) in spaces {
        check_name(tag)?;
        if !seen.insert(tag.as_str()) {
            return Err(Error::DuplicateTag(tag.clone()));
        }
    }
    let total: usize = spaces.iter().map(|(_, s)| s.len()).sum();
    let mut points = Vec::with_capacity(total);
    let mut below = vec![false; total * total];
    let mut offsets = Vec::with_capacity(spaces.len() + 1);
    let mut offset = 0;
    for (tag, s) in spaces {
        offsets.push(offset);
        points.extend(s.points().iter().map(|p| format!("{tag}.{p}")));
        for x in 0..s.len() {
            for y in 0..s.len() {
                below[(offset + x) * total + offset + y] = s.is_below(x, y);
            }
        }
        offset += s.len();
    }
    offsets.push(offset);
    let name = format!("({})", spaces.iter().map(|(_, s)| s.name()).collect::<Vec<_>>().join("+"));
    Ok(Coproduct {
        space: Arc::new(Space::from_closed(name, points, below)),
        offsets,
        factors: spaces.iter().map(|(_, s)| s.clone()).collect(),
    })
}

/// A finite product with row-major point layout; the point with coordinates
/// `(x, y)` is named `(x,y)`.
#[derive(Clone, Debug)]
pub struct Product {
    pub space: Arc<Space>,
    factors: Vec<Arc<Space>>,
}

impl Product {
    pub fn factors(&self) -> &[Arc<Space>] {
        &self.factors
    }

    pub fn index_of(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.factors.len());
        coords.iter().zip(&self.factors).fold(0, |acc, (&c, f)| acc * f.len() + c)
    }

    pub fn coords(&self, mut p: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (slot, f) in out.iter_mut().zip(&self.factors).rev() {
            *slot = p % f.len();
            p /= f.len();
        }
        out
    }

    pub fn projection(&self, j: usize) -> super::TotalMap {
        let table = (0..self.space.len()).map(|p| self.coords(p)[j]).collect();
        super::TotalMap::new(&format!("pr{j}"), self.space.clone(), self.factors[j].clone(), table)
            .expect("projection is well typed")
    }

    pub fn projections(&self) -> Vec<super::TotalMap> {
        (0..self.factors.len()).map(|j| self.projection(j)).collect()
    }
}

pub fn product(spaces: &[Arc<Space>]) -> Result<Product> {
    if spaces.is_empty() {
        return Err(Error::EmptyProduct);
    }
    let total: usize = spaces.iter().map(|s| s.len()).product();
    let prod = Product { space: Arc::new(Space::empty("tmp").expect("valid")), factors: spaces.to_vec() };
    let coords: Vec<Vec<usize>> = (0..total).map(|p| prod.coords(p)).collect();
    let points = coords
        .iter()
        .map(|c| {
            let parts: Vec<&str> = c.iter().zip(spaces).map(|(&x, s)| s.point(x)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let mut below = vec![false; total * total];
    for p in 0..total {
        for q in 0..total {
            below[p * total + q] = coords[p].iter().zip(&coords[q]).zip(spaces).all(|((&a, &b), s)| s.is_below(a, b));
        }
    }
    let name = format!("({})", spaces.iter().map(|s| s.name()).collect::<Vec<_>>().join("*"));
    Ok(Product { space: Arc::new(Space::from_closed(name, points, below)), ..prod })
}

/// A subspace with its inclusion; points keep the parent's order.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub space: Arc<Space>,
    pub parent: Arc<Space>,
    /// `inclusion[i]` is the parent index of subspace point `i`.
    pub inclusion: Vec<usize>,
}

impl Subspace {
    pub fn local(&self, parent_point: usize) -> Option<usize> {
        self.inclusion.binary_search(&parent_point).ok()
    }

    pub fn inclusion_map(&self) -> super::TotalMap {
        super::TotalMap::new("incl", self.space.clone(), self.parent.clone(), self.inclusion.clone())
            .expect("inclusion is well typed")
    }
}

pub fn subspace(parent: &Arc<Space>, set: &PointSet) -> Result<Subspace> {
    parent.check_set(set)?;
    let inclusion: Vec<usize> = set.iter().copied().collect();
    let n = inclusion.len();
    let mut below = vec![false; n * n];
    for (i, &x) in inclusion.iter().enumerate() {
        for (j, &y) in inclusion.iter().enumerate() {
            below[i * n + j] = parent.is_below(x, y);
        }
    }
    let name = if n == parent.len() {
        parent.name().to_string()
    } else {
        format!("{}|{{{}}}", parent.name(), parent.names_of(set).join(","))
    };
    let points = inclusion.iter().map(|&x| parent.point(x).to_string()).collect();
    Ok(Subspace { space: Arc::new(Space::from_closed(name, points, below)), parent: parent.clone(), inclusion })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> PointSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn sierpinski_opens() {
        let s = Space::sierpinski();
        let opens: BTreeSet<PointSet> = s.open_sets().into_iter().collect();
        assert_eq!(opens, [set(&[]), set(&[1]), set(&[0, 1])].into_iter().collect());
        assert!(s.is_open(&set(&[1])).unwrap());
        assert!(!s.is_open(&set(&[0])).unwrap());
        assert_eq!(s.closure(&set(&[1])).unwrap(), set(&[0, 1]));
    }

    #[test]
    fn closure_edge_cases() {
        let d = Space::discrete(3);
        assert_eq!(d.closure(&set(&[])).unwrap(), set(&[]));
        assert_eq!(d.closure(&set(&[1])).unwrap(), set(&[1]));
        assert!(matches!(d.closure(&set(&[7])), Err(Error::PointOutOfRange { .. })));
    }

    #[test]
    fn named_constructors() {
        let d = Space::discrete(2);
        assert!(!d.is_below(0, 1) && !d.is_below(1, 0));
        let i = Space::indiscrete(2);
        assert!(i.is_below(0, 1) && i.is_below(1, 0));
        let c = Space::chain(3);
        assert!(c.is_below(0, 2) && !c.is_below(2, 0));
    }

    #[test]
    fn build_closes_transitively() {
        let s = Space::build("X", &["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert!(s.is_below(0, 2));
        assert!(s.is_preorder());
    }

    #[test]
    fn build_errors() {
        assert!(matches!(Space::build("X", &["a", "a"], &[]), Err(Error::DuplicatePoint { .. })));
        assert!(matches!(Space::build("X", &["a"], &[("a", "z")]), Err(Error::UnknownPoint { .. })));
        assert!(matches!(Space::build("bad name", &["a"], &[]), Err(Error::InvalidName(_))));
    }

    #[test]
    fn coproduct_of_two_sierpinski_spaces() {
        let s = Arc::new(Space::sierpinski());
        let c = coproduct(&[s.clone(), s]);
        let space = &c.space;
        assert_eq!(space.len(), 4);
        assert_eq!(space.components().len(), 2);
        assert!(space.is_below(c.inject(1, 0), c.inject(1, 1)));
        assert!(!space.is_below(c.inject(0, 0), c.inject(1, 1)));
        assert!(c.injections().iter().all(|i| i.is_continuous()));
    }

    #[test]
    fn empty_coproduct_is_empty() {
        assert!(coproduct(&[]).space.is_empty());
    }

    #[test]
    fn product_order_is_componentwise() {
        let s = Arc::new(Space::sierpinski());
        let p = product(&[s.clone(), s]).unwrap();
        let lo = p.index_of(&[0, 0]);
        let hi = p.index_of(&[1, 1]);
        assert!(p.space.is_below(lo, hi));
        assert!(!p.space.is_below(p.index_of(&[0, 1]), p.index_of(&[1, 0])));
        assert!(p.projections().iter().all(|m| m.is_continuous()));
        assert_eq!(p.space.point(hi), "(s1,s1)");
    }

    #[test]
    fn discrete_product_is_discrete() {
        let d = Arc::new(Space::discrete(2));
        let p = product(&[d.clone(), d]).unwrap();
        assert_eq!(p.space.below_pairs().count(), 0);
    }

    #[test]
    fn empty_product_rejected() {
        assert!(matches!(product(&[]), Err(Error::EmptyProduct)));
    }

    #[test]
    fn subspace_of_chain() {
        let c = Arc::new(Space::chain(3));
        let sub = subspace(&c, &set(&[0, 2])).unwrap();
        assert_eq!(sub.space.len(), 2);
        assert!(sub.space.is_below(0, 1));
        assert_eq!(sub.local(2), Some(1));
        assert_eq!(sub.local(1), None);
        assert!(sub.inclusion_map().is_continuous());
    }

    #[test]
    fn open_iff_complement_closed() {
        let c = Space::chain(3);
        for mask in 0..8usize {
            let s: PointSet = (0..3).filter(|i| mask >> i & 1 == 1).collect();
            let comp: PointSet = (0..3).filter(|i| !s.contains(i)).collect();
            assert_eq!(c.is_open(&s).unwrap(), c.is_closed(&comp).unwrap());
        }
    }
}
