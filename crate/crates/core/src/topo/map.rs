use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use super::space::{check_name, ensure_same, product, PointSet, Space};
use crate::error::{Error, Result};

/// A finitely tabulated partial function between two spaces.
#[derive(Clone, PartialEq, Eq)]
pub struct PartialMap {
    name: String,
    dom: Arc<Space>,
    cod: Arc<Space>,
    table: Vec<Option<usize>>,
}

impl PartialMap {
    pub fn new(name: &str, dom: Arc<Space>, cod: Arc<Space>, table: Vec<Option<usize>>) -> Result<PartialMap> {
        check_name(name)?;
        if table.len() != dom.len() {
            return Err(Error::Precondition(format!(
                "table of `{name}` has {} rows but `{}` has {} points",
                table.len(),
                dom.name(),
                dom.len()
            )));
        }
        if let Some(&Some(y)) = table.iter().find(|v| matches!(v, Some(y) if *y >= cod.len())) {
            return Err(Error::PointOutOfRange { space: cod.name().to_string(), index: y });
        }
        Ok(PartialMap { name: name.to_string(), dom, cod, table })
    }

    /// Builds a map from `(point, image)` name pairs; unlisted points are undefined.
    pub fn from_rows<S: AsRef<str>>(name: &str, dom: Arc<Space>, cod: Arc<Space>, rows: &[(S, S)]) -> Result<PartialMap> {
        let mut table = vec![None; dom.len()];
        for (x, y) in rows {
            let xi = dom.require(x.as_ref())?;
            let yi = cod.require(y.as_ref())?;
            if table[xi].replace(yi).is_some_and(|old| old != yi) {
                return Err(Error::Precondition(format!("`{name}` assigns two images to `{}`", x.as_ref())));
            }
        }
        PartialMap::new(name, dom, cod, table)
    }

    pub fn nowhere(name: &str, dom: Arc<Space>, cod: Arc<Space>) -> Result<PartialMap> {
        let n = dom.len();
        PartialMap::new(name, dom, cod, vec![None; n])
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

    pub fn table(&self) -> &[Option<usize>] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, x: usize) -> Option<usize> {
        self.table[x]
    }

    pub fn defined_on(&self) -> PointSet {
        (0..self.table.len()).filter(|&x| self.table[x].is_some()).collect()
    }

    pub fn is_total(&self) -> bool {
        self.table.iter().all(Option::is_some)
    }

    pub fn is_nowhere_defined(&self) -> bool {
        self.table.iter().all(Option::is_none)
    }

    pub fn image(&self) -> PointSet {
        self.table.iter().flatten().copied().collect()
    }

    pub fn renamed(&self, name: &str) -> Result<PartialMap> {
        check_name(name)?;
        Ok(PartialMap { name: name.to_string(), ..self.clone() })
    }

    pub fn into_total(self) -> Result<TotalMap> {
        if self.is_total() {
            Ok(TotalMap(self))
        } else {
            Err(Error::NotTotal { map: self.name })
        }
    }

    /// Monotone on the domain of definition; on finite spaces this is
    /// continuity of the map on its domain subspace.
    pub fn is_continuous(&self) -> bool {
        let defined: Vec<(usize, usize)> =
            self.table.iter().enumerate().filter_map(|(x, v)| v.map(|y| (x, y))).collect();
        defined.iter().all(|&(x, fx)| {
            defined.iter().all(|&(y, fy)| !self.dom.is_below(x, y) || self.cod.is_below(fx, fy))
        })
    }

    /// Continuity at `x`: every defined `y` above `x` has its image above `f(x)`.
    pub fn is_continuous_at(&self, x: usize) -> Result<bool> {
        let fx = self.defined_at(x)?;
        Ok(self.table.iter().enumerate().all(|(y, fy)| match fy {
            Some(fy) => !self.dom.is_below(x, y) || self.cod.is_below(fx, *fy),
            None => true,
        }))
    }

    pub(crate) fn defined_at(&self, x: usize) -> Result<usize> {
        if x >= self.dom.len() {
            return Err(Error::PointOutOfRange { space: self.dom.name().to_string(), index: x });
        }
        self.table[x].ok_or_else(|| Error::Undefined { map: self.name.clone(), point: self.dom.point(x).to_string() })
    }

    /// The same map on the subspace given by `set`, made total on it when
    /// `set` lies inside the domain of definition.
    pub fn on_subspace(&self, sub: &super::Subspace) -> Result<PartialMap> {
        ensure_same(&self.dom, &sub.parent)?;
        let table = sub.inclusion.iter().map(|&x| self.table[x]).collect();
        PartialMap::new(&self.name, sub.space.clone(), self.cod.clone(), table)
    }
}

impl fmt::Debug for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .table
            .iter()
            .enumerate()
            .filter_map(|(x, v)| v.map(|y| format!("{}->{}", self.dom.point(x), self.cod.point(y))))
            .collect();
        write!(f, "{}: {} -> {} [{}]", self.name, self.dom.name(), self.cod.name(), rows.join(" "))
    }
}

/// A partial map that is defined everywhere.
#[derive(Clone, PartialEq, Eq)]
pub struct TotalMap(PartialMap);

impl TotalMap {
    pub fn new(name: &str, dom: Arc<Space>, cod: Arc<Space>, table: Vec<usize>) -> Result<TotalMap> {
        PartialMap::new(name, dom, cod, table.into_iter().map(Some).collect()).map(TotalMap)
    }

    pub fn from_fn(name: &str, dom: Arc<Space>, cod: Arc<Space>, f: impl Fn(usize) -> usize) -> Result<TotalMap> {
        let table = (0..dom.len()).map(f).collect();
        TotalMap::new(name, dom, cod, table)
    }

    pub fn from_rows<S: AsRef<str>>(name: &str, dom: Arc<Space>, cod: Arc<Space>, rows: &[(S, S)]) -> Result<TotalMap> {
        PartialMap::from_rows(name, dom, cod, rows)?.into_total()
    }

    pub fn identity(space: &Arc<Space>) -> TotalMap {
        TotalMap::from_fn(&format!("id_{}", space.name()), space.clone(), space.clone(), |x| x).expect("valid")
    }

    pub fn constant(name: &str, dom: Arc<Space>, cod: Arc<Space>, value: usize) -> Result<TotalMap> {
        TotalMap::from_fn(name, dom, cod, |_| value)
    }

    #[inline]
    pub fn value(&self, x: usize) -> usize {
        self.0.table[x].expect("total map")
    }

    pub fn values(&self) -> Vec<usize> {
        self.0.table.iter().map(|v| v.expect("total map")).collect()
    }

    pub fn as_partial(&self) -> &PartialMap {
        &self.0
    }

    pub fn into_partial(self) -> PartialMap {
        self.0
    }

    pub fn renamed(&self, name: &str) -> Result<TotalMap> {
        self.0.renamed(name).map(TotalMap)
    }

    /// Restriction to a subspace, as a total map on it.
    pub fn on_subspace(&self, sub: &super::Subspace) -> Result<TotalMap> {
        self.0.on_subspace(sub).map(TotalMap)
    }
}

impl Deref for TotalMap {
    type Target = PartialMap;

    fn deref(&self) -> &PartialMap {
        &self.0
    }
}

impl fmt::Debug for TotalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<TotalMap> for PartialMap {
    fn from(m: TotalMap) -> PartialMap {
        m.0
    }
}

/// `g ∘ f`, defined at `x` iff `f(x)` and `g(f(x))` are.
pub fn compose(g: &PartialMap, f: &PartialMap) -> Result<PartialMap> {
    ensure_same(&g.dom, &f.cod)?;
    let table = f.table.iter().map(|v| v.and_then(|y| g.table[y])).collect();
    PartialMap::new(&format!("{}.{}", g.name, f.name), f.dom.clone(), g.cod.clone(), table)
}

pub fn compose_total(g: &TotalMap, f: &TotalMap) -> Result<TotalMap> {
    compose(g, f).map(TotalMap)
}

/// The diagonal `x ↦ (x, x)` into `X × X`.
pub fn delta(space: &Arc<Space>) -> TotalMap {
    let prod = product(&[space.clone(), space.clone()]).expect("nonempty family");
    let table = (0..space.len()).map(|x| prod.index_of(&[x, x])).collect();
    TotalMap::new(&format!("delta_{}", space.name()), space.clone(), prod.space.clone(), table).expect("valid")
}

/// `f π g`, defined on the product of the domains of definition.
pub fn pi_pair(f: &PartialMap, g: &PartialMap) -> Result<PartialMap> {
    pi_product(&[f.clone(), g.clone()])
}

/// `∏ f_i` for a nonempty family.
pub fn pi_product(maps: &[PartialMap]) -> Result<PartialMap> {
    let doms: Vec<Arc<Space>> = maps.iter().map(|m| m.dom.clone()).collect();
    let cods: Vec<Arc<Space>> = maps.iter().map(|m| m.cod.clone()).collect();
    let dom = product(&doms)?;
    let cod = product(&cods)?;
    let table = (0..dom.space.len())
        .map(|p| {
            let coords = dom.coords(p);
            let images: Option<Vec<usize>> = coords.iter().zip(maps).map(|(&x, m)| m.table[x]).collect();
            images.map(|ys| cod.index_of(&ys))
        })
        .collect();
    let name = format!("pi({})", maps.iter().map(|m| m.name.as_str()).collect::<Vec<_>>().join(","));
    PartialMap::new(&name, dom.space.clone(), cod.space.clone(), table)
}

/// `f^n`, the `n`-fold π-product of a total map with itself.
pub fn pi_power(f: &TotalMap, n: usize) -> Result<TotalMap> {
    if n == 0 {
        return Err(Error::Precondition("pi_power needs n >= 1".into()));
    }
    let copies = vec![f.as_partial().clone(); n];
    pi_product(&copies)?.renamed(&format!("{}^{n}", f.name))?.into_total()
}

/// Narrows the domain of definition to `set ∩ defined_on`.
pub fn restrict(f: &PartialMap, set: &PointSet) -> Result<PartialMap> {
    f.dom.check_set(set)?;
    let table = f.table.iter().enumerate().map(|(x, v)| if set.contains(&x) { *v } else { None }).collect();
    PartialMap::new(&f.name, f.dom.clone(), f.cod.clone(), table)
}

/// Equality of partial maps: same domain of definition and same values.
pub fn map_equal(f: &PartialMap, g: &PartialMap) -> Result<bool> {
    ensure_same(&f.dom, &g.dom)?;
    ensure_same(&f.cod, &g.cod)?;
    Ok(f.table == g.table)
}


#[cfg(test)]
mod tests {
    use super::*;

    fn s2() -> Arc<Space> {
        Arc::new(Space::sierpinski())
    }

    fn flip() -> TotalMap {
        let s = s2();
        TotalMap::new("flip", s.clone(), s, vec![1, 0]).unwrap()
    }

    #[test]
    fn continuity() {
        let s = s2();
        assert!(TotalMap::identity(&s).is_continuous());
        assert!(!flip().is_continuous());
        assert!(TotalMap::constant("c", s.clone(), s, 1).unwrap().is_continuous());
    }

    #[test]
    fn continuity_at_points() {
        let f = flip();
        assert!(!f.is_continuous_at(0).unwrap());
        assert!(f.is_continuous_at(1).unwrap());
        let p = restrict(&f, &[1].into_iter().collect()).unwrap();
        assert!(matches!(p.is_continuous_at(0), Err(Error::Undefined { .. })));
        assert!(p.is_continuous());
    }

    #[test]
    fn compose_with_identity() {
        let f = flip();
        let id = TotalMap::identity(f.cod());
        assert!(map_equal(&compose(&id, &f).unwrap(), &f).unwrap());
        assert!(map_equal(&compose(&f, &f).unwrap(), &TotalMap::identity(f.dom())).unwrap());
    }

    #[test]
    fn compose_partial_domains() {
        let s = s2();
        let f = PartialMap::new("f", s.clone(), s.clone(), vec![Some(1), None]).unwrap();
        let g = PartialMap::new("g", s.clone(), s, vec![Some(0), None]).unwrap();
        assert!(compose(&g, &f).unwrap().is_nowhere_defined());
        assert_eq!(compose(&f, &g).unwrap().table(), &[Some(1), None]);
    }

    #[test]
    fn compose_rejects_mismatch() {
        let d = Arc::new(Space::discrete(2));
        let f = TotalMap::identity(&d);
        assert!(matches!(compose(&flip(), &f), Err(Error::SpaceMismatch { .. })));
    }

    #[test]
    fn diagonal() {
        let s = s2();
        let d = delta(&s);
        assert_eq!(d.cod().point(d.value(0)), "(s0,s0)");
        assert!(d.is_continuous());
    }

    #[test]
    fn pairing_is_defined_on_product_of_domains() {
        let s = s2();
        let f = PartialMap::new("f", s.clone(), s.clone(), vec![Some(0), None]).unwrap();
        let g = TotalMap::identity(&s);
        let h = pi_pair(&f, &g).unwrap();
        assert_eq!(h.defined_on().len(), 2);
        assert!(h.is_continuous());
    }

    #[test]
    fn powers() {
        let f = flip();
        let f2 = pi_power(&f, 2).unwrap();
        assert_eq!(f2.dom().len(), 4);
        assert!(pi_power(&f, 0).is_err());
    }

    #[test]
    fn restriction_and_equality() {
        let f = flip();
        let nowhere = restrict(&f, &PointSet::new()).unwrap();
        assert!(nowhere.is_nowhere_defined());
        assert!(map_equal(&nowhere, &PartialMap::nowhere("n", f.dom().clone(), f.cod().clone()).unwrap()).unwrap());
        assert!(map_equal(&f, &f).unwrap());
        assert!(!map_equal(&f, &restrict(&f, &[0].into_iter().collect()).unwrap()).unwrap());
    }

    #[test]
    fn from_rows_checks_points() {
        let s = s2();
        let f = TotalMap::from_rows("f", s.clone(), s.clone(), &[("s0", "s1"), ("s1", "s1")]).unwrap();
        assert_eq!(f.values(), vec![1, 1]);
        assert!(TotalMap::from_rows("f", s.clone(), s.clone(), &[("s0", "s1")]).is_err());
        assert!(PartialMap::from_rows("f", s.clone(), s, &[("s0", "zz")]).is_err());
    }
}
