use std::collections::HashMap;

use super::Category;
use crate::error::{Error, Result};
use crate::explore::FinitePoset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A category with finitely many objects and morphisms, given by an
/// explicit composition table. Construction checks all axioms.
#[derive(Clone, Debug)]
pub struct FinCategory {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    identities: Vec<usize>,
    composition: HashMap<(usize, usize), usize>,
}

/// A universal cone: the apex object and one leg per factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalCone {
    pub object: usize,
    pub legs: Vec<usize>,
}

impl FinCategory {
    /// `composition` lists `((g, f), g∘f)` for every composable pair.
    pub fn new(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identities: Vec<usize>,
        composition: Vec<((usize, usize), usize)>,
    ) -> Result<Self> {
        let cat = FinCategory { objects, arrows, identities, composition: composition.into_iter().collect() };
        cat.check()?;
        Ok(cat)
    }

    fn check(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Axiom(msg));
        let n = self.arrows.len();
        if self.identities.len() != self.objects.len() {
            return fail("one identity per object is required".into());
        }
        for a in &self.arrows {
            if a.source >= self.objects.len() || a.target >= self.objects.len() {
                return fail(format!("{} has an unknown end", a.name));
            }
        }
        for (obj, &id) in self.identities.iter().enumerate() {
            if id >= n || self.arrows[id].source != obj || self.arrows[id].target != obj {
                return fail(format!("identity of {} is not an endomorphism of it", self.objects[obj]));
            }
        }
        for (&(g, f), &h) in &self.composition {
            if g >= n || f >= n || h >= n || self.arrows[f].target != self.arrows[g].source {
                return fail(format!("composite entry ({g}, {f}) is not composable"));
            }
            if self.arrows[h].source != self.arrows[f].source || self.arrows[h].target != self.arrows[g].target {
                return fail(format!("{} has the wrong ends", self.arrows[h].name));
            }
        }
        for f in 0..n {
            for g in 0..n {
                if self.arrows[f].target == self.arrows[g].source && !self.composition.contains_key(&(g, f)) {
                    return fail(format!("{} after {} is missing", self.arrows[g].name, self.arrows[f].name));
                }
            }
            let (src, tgt) = (self.arrows[f].source, self.arrows[f].target);
            if self.composition[&(f, self.identities[src])] != f || self.composition[&(self.identities[tgt], f)] != f {
                return fail(format!("unit law fails at {}", self.arrows[f].name));
            }
        }
        for f in 0..n {
            for g in self.outgoing(self.arrows[f].target) {
                for h in self.outgoing(self.arrows[g].target) {
                    let left = self.composition[&(h, self.composition[&(g, f)])];
                    let right = self.composition[&(self.composition[&(h, g)], f)];
                    if left != right {
                        return fail(format!(
                            "associativity fails at {}, {}, {}",
                            self.arrows[h].name, self.arrows[g].name, self.arrows[f].name
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    fn outgoing(&self, obj: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == obj)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn identity_of(&self, obj: usize) -> usize {
        self.identities[obj]
    }

    pub fn hom(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&m| self.arrows[m].source == a && self.arrows[m].target == b).collect()
    }

    /// `g ∘ f`, when composable.
    pub fn then(&self, f: usize, g: usize) -> Option<usize> {
        self.composition.get(&(g, f)).copied()
    }

    /// A coproduct of `factors`, found by testing every candidate cone
    /// against every cocone. The first one in object and arrow order wins.
    pub fn coproduct(&self, factors: &[usize]) -> Option<UniversalCone> {
        (0..self.objects.len()).find_map(|apex| {
            let homs: Vec<Vec<usize>> = factors.iter().map(|&a| self.hom(a, apex)).collect();
            tuples(&homs).into_iter().find(|mu| self.is_coproduct(factors, apex, mu)).map(|legs| UniversalCone {
                object: apex,
                legs,
            })
        })
    }

    fn is_coproduct(&self, factors: &[usize], apex: usize, mu: &[usize]) -> bool {
        (0..self.objects.len()).all(|z| {
            let homs: Vec<Vec<usize>> = factors.iter().map(|&a| self.hom(a, z)).collect();
            tuples(&homs).iter().all(|fs| {
                let mediators = self.hom(apex, z).into_iter().filter(|&f| {
                    mu.iter().zip(fs).all(|(&m, &fi)| self.then(m, f) == Some(fi))
                });
                mediators.count() == 1
            })
        })
    }

    /// A pullback of the cospan `maps` (all with the same target).
    pub fn pullback(&self, maps: &[usize]) -> Option<UniversalCone> {
        let ends: Vec<usize> = maps.iter().map(|&m| self.arrows[m].source).collect();
        if maps.iter().any(|&m| self.arrows[m].target != self.arrows[maps[0]].target) {
            return None;
        }
        (0..self.objects.len()).find_map(|apex| {
            let homs: Vec<Vec<usize>> = ends.iter().map(|&a| self.hom(apex, a)).collect();
            tuples(&homs)
                .into_iter()
                .find(|p| self.commutes(maps, p) && self.is_pullback(maps, &ends, apex, p))
                .map(|legs| UniversalCone { object: apex, legs })
        })
    }

    fn commutes(&self, maps: &[usize], legs: &[usize]) -> bool {
        let mut composites = maps.iter().zip(legs).map(|(&f, &p)| self.then(p, f));
        let first = composites.next().flatten();
        composites.all(|c| c == first)
    }

    fn is_pullback(&self, maps: &[usize], ends: &[usize], apex: usize, legs: &[usize]) -> bool {
        (0..self.objects.len()).all(|q| {
            let homs: Vec<Vec<usize>> = ends.iter().map(|&a| self.hom(q, a)).collect();
            tuples(&homs).iter().filter(|qs| self.commutes(maps, qs)).all(|qs| {
                let mediators = self.hom(q, apex).into_iter().filter(|&l| {
                    legs.iter().zip(qs.iter()).all(|(&p, &qi)| self.then(l, p) == Some(qi))
                });
                mediators.count() == 1
            })
        })
    }
}

impl Category for FinCategory {
    type Object = usize;
    type Morphism = usize;

    fn source(&self, m: &usize) -> usize {
        self.arrows[*m].source
    }

    fn target(&self, m: &usize) -> usize {
        self.arrows[*m].target
    }

    fn identity(&self, a: &usize) -> usize {
        self.identities[*a]
    }

    fn compose(&self, g: &usize, f: &usize) -> Result<usize> {
        self.then(*f, *g).ok_or_else(|| {
            Error::Precondition(format!("{} and {} are not composable", self.arrows[*g].name, self.arrows[*f].name))
        })
    }
}

/// Every choice of one element per list.
fn tuples(lists: &[Vec<usize>]) -> Vec<Vec<usize>> {
    lists.iter().fold(vec![Vec::new()], |acc, list| {
        acc.iter()
            .flat_map(|prefix| {
                list.iter().map(move |&x| {
                    let mut t = prefix.clone();
                    t.push(x);
                    t
                })
            })
            .collect()
    })
}

/// A category with at most one morphism between any two objects.
#[derive(Clone, Debug)]
pub struct ThinCategory {
    cat: FinCategory,
}

impl ThinCategory {
    pub fn new(cat: FinCategory) -> Result<Self> {
        let n = cat.objects().len();
        for a in 0..n {
            for b in 0..n {
                if cat.hom(a, b).len() > 1 {
                    return Err(Error::Axiom(format!("{} to {} has several morphisms", cat.objects[a], cat.objects[b])));
                }
            }
        }
        Ok(ThinCategory { cat })
    }

    pub fn category(&self) -> &FinCategory {
        &self.cat
    }

    pub fn arrow(&self, a: usize, b: usize) -> Option<usize> {
        self.cat.hom(a, b).first().copied()
    }

    /// Coproduct object of `a` and `b`, if any.
    pub fn coproduct(&self, a: usize, b: usize) -> Option<usize> {
        self.cat.coproduct(&[a, b]).map(|c| c.object)
    }

    /// Pullback object of `a → z ← b`; `None` when either arrow is missing
    /// or no pullback exists.
    pub fn pullback(&self, a: usize, b: usize, z: usize) -> Option<usize> {
        let (f, g) = (self.arrow(a, z)?, self.arrow(b, z)?);
        self.cat.pullback(&[f, g]).map(|c| c.object)
    }
}

/// The category with one morphism `a → b` for each `a ≤ b`.
pub fn poset_to_category(poset: &FinitePoset) -> ThinCategory {
    let n = poset.len();
    let mut arrows = Vec::new();
    let mut index = HashMap::new();
    for a in 0..n {
        for b in 0..n {
            if poset.leq(a, b) {
                index.insert((a, b), arrows.len());
                arrows.push(Arrow { name: format!("{}<={}", poset.label(a), poset.label(b)), source: a, target: b });
            }
        }
    }
    let identities = (0..n).map(|a| index[&(a, a)]).collect();
    let mut composition = Vec::new();
    for (&(a, b), &f) in &index {
        for c in 0..n {
            if let Some(&g) = index.get(&(b, c)) {
                composition.push(((g, f), index[&(a, c)]));
            }
        }
    }
    let cat = FinCategory::new(poset.labels().to_vec(), arrows, identities, composition)
        .expect("a partial order satisfies the category axioms");
    ThinCategory::new(cat).expect("a partial order is thin")
}
