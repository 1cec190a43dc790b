//! Brute-force oracles shared by the integration tests. They work from the
//! open sets of a space rather than from the stored preorder wherever the
//! two notions could disagree.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use contred::cli::Corpus;
use contred::explore::random::{random_map_with, random_partial_map_with, random_problem_with, random_space_with, rng};
use contred::invariants::LevelValue;
use contred::reduce::Witness2;
use contred::topo::{coproduct, product, PartialMap, PointSet, Relation, Space, TotalMap};
use rand::RngExt;

pub fn subsets(points: &[usize]) -> Vec<PointSet> {
    (0..1usize << points.len())
        .map(|mask| points.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect())
        .collect()
}

pub fn all_points(x: &Space) -> Vec<usize> {
    (0..x.len()).collect()
}

pub fn is_preorder(x: &Space) -> bool {
    let n = x.len();
    (0..n).all(|a| x.is_below(a, a))
        && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(x.is_below(a, b) && x.is_below(b, c)) || x.is_below(a, c))))
}

/// Open sets: subsets closed upward under specialization.
pub fn opens(x: &Space) -> Vec<PointSet> {
    subsets(&all_points(x))
        .into_iter()
        .filter(|s| s.iter().all(|&p| (0..x.len()).all(|q| !x.is_below(p, q) || s.contains(&q))))
        .collect()
}

pub fn closed_sets(x: &Space) -> Vec<PointSet> {
    let every: PointSet = all_points(x).into_iter().collect();
    opens(x).into_iter().map(|u| every.difference(&u).copied().collect()).collect()
}

/// Intersection of all closed supersets.
pub fn closure(x: &Space, s: &PointSet) -> PointSet {
    closed_sets(x)
        .into_iter()
        .filter(|c| s.is_subset(c))
        .fold(all_points(x).into_iter().collect(), |acc: PointSet, c| acc.intersection(&c).copied().collect())
}

/// Opens of the subspace on `d`: traces `U ∩ d` of ambient opens.
pub fn subspace_opens(x: &Space, d: &PointSet) -> BTreeSet<PointSet> {
    opens(x).into_iter().map(|u| u.intersection(d).copied().collect()).collect()
}

/// `f` restricted to `d ∩ dom(f)` is continuous: preimages of opens are
/// open in that subspace.
pub fn continuous_on(f: &PartialMap, d: &PointSet) -> bool {
    let d: PointSet = d.iter().copied().filter(|&p| f.apply(p).is_some()).collect();
    let sub = subspace_opens(f.dom(), &d);
    opens(f.cod()).iter().all(|v| {
        let pre: PointSet = d.iter().copied().filter(|&p| v.contains(&f.apply(p).unwrap())).collect();
        sub.contains(&pre)
    })
}

pub fn continuous(f: &PartialMap) -> bool {
    continuous_on(f, &all_points(f.dom()).into_iter().collect())
}

/// Continuity of `f|d` at `x`: every open around `f(x)` pulls back to a
/// neighbourhood of `x` in `d`.
pub fn continuous_at_within(f: &PartialMap, d: &PointSet, x: usize) -> bool {
    let d: PointSet = d.iter().copied().filter(|&p| f.apply(p).is_some()).collect();
    let sub = subspace_opens(f.dom(), &d);
    let fx = f.apply(x).unwrap();
    opens(f.cod()).iter().filter(|v| v.contains(&fx)).all(|v| {
        sub.iter().any(|u| u.contains(&x) && u.iter().all(|&p| f.apply(p).is_some_and(|y| v.contains(&y))))
    })
}

/// Level sets by definition, closures computed inside the domain subspace.
pub fn level_chain(f: &PartialMap, closed: bool) -> (Vec<PointSet>, bool) {
    let defined: PointSet = all_points(f.dom()).into_iter().filter(|&p| f.apply(p).is_some()).collect();
    let mut chain = vec![defined.clone()];
    loop {
        let cur = chain.last().unwrap().clone();
        if cur.is_empty() {
            return (chain, true);
        }
        let bad: PointSet = cur.iter().copied().filter(|&x| !continuous_at_within(f, &cur, x)).collect();
        let next = if closed {
            let c = closure(f.dom(), &bad);
            c.intersection(&defined).copied().collect()
        } else {
            bad
        };
        if next == cur {
            return (chain, false);
        }
        chain.push(next);
    }
}

pub fn level(f: &PartialMap, closed: bool) -> LevelValue {
    let (chain, terminates) = level_chain(f, closed);
    if terminates {
        LevelValue::Finite(chain.len() - 1)
    } else {
        LevelValue::Unbounded
    }
}

pub fn lev_point(f: &PartialMap, x: usize, closed: bool) -> LevelValue {
    let (chain, _) = level_chain(f, closed);
    match chain.iter().position(|s| !s.contains(&x)) {
        Some(a) => LevelValue::Finite(a),
        None => LevelValue::Unbounded,
    }
}

/// Least number of blocks in a partition of the domain of definition on
/// which `f` is piecewise continuous, by walking all set partitions.
pub fn basesize(f: &PartialMap) -> usize {
    let pts: Vec<usize> = all_points(f.dom()).into_iter().filter(|&p| f.apply(p).is_some()).collect();
    if pts.is_empty() {
        return 0;
    }
    let mut best = pts.len();
    let mut labels = vec![0usize; pts.len()];
    partitions(&pts, &mut labels, 1, 1, f, &mut best);
    best
}

fn partitions(pts: &[usize], labels: &mut Vec<usize>, i: usize, used: usize, f: &PartialMap, best: &mut usize) {
    if i == pts.len() {
        let blocks: Vec<PointSet> =
            (0..used).map(|b| pts.iter().zip(labels.iter()).filter(|(_, &l)| l == b).map(|(&p, _)| p).collect()).collect();
        if used < *best && blocks.iter().all(|b| continuous_on(f, b)) {
            *best = used;
        }
        return;
    }
    for l in 0..=used.min(pts.len() - 1) {
        labels[i] = l;
        partitions(pts, labels, i + 1, used.max(l + 1), f, best);
    }
}

pub fn total_tables(n: usize, m: usize) -> Vec<Vec<usize>> {
    if n > 0 && m == 0 {
        return Vec::new();
    }
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|t| (0..m).map(move |v| [t.clone(), vec![v]].concat())).collect();
    }
    out
}

pub fn partial_tables(n: usize, m: usize) -> Vec<Vec<Option<usize>>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t: Vec<Option<usize>>| {
                std::iter::once(None).chain((0..m).map(Some)).map(move |v| [t.clone(), vec![v]].concat())
            })
            .collect();
    }
    out
}

/// Continuous total maps `x -> y`, checked through open sets.
pub fn continuous_total(x: &Arc<Space>, y: &Arc<Space>) -> Vec<TotalMap> {
    total_tables(x.len(), y.len())
        .into_iter()
        .map(|t| TotalMap::new("G", x.clone(), y.clone(), t).unwrap())
        .filter(|g| continuous(g))
        .collect()
}

/// `f ≤₀ g` by trying every continuous `G`.
pub fn le0(f: &TotalMap, g: &TotalMap) -> bool {
    continuous_total(f.dom(), g.dom()).iter().any(|big_g| (0..f.dom().len()).all(|x| g.value(big_g.value(x)) == f.value(x)))
}

/// `f ≤₂ g` by trying every continuous total `G` and every continuous
/// partial `F` on the whole product `X₁ × Y₂`. Only for tiny instances.
pub fn le2(f: &TotalMap, g: &TotalMap) -> bool {
    let x1 = f.dom();
    let prod = product(&[x1.clone(), g.cod().clone()]).unwrap();
    let fs: Vec<PartialMap> = partial_tables(prod.space.len(), f.cod().len())
        .into_iter()
        .map(|t| PartialMap::new("F", prod.space.clone(), f.cod().clone(), t).unwrap())
        .filter(continuous)
        .collect();
    continuous_total(x1, g.dom()).iter().any(|big_g| {
        fs.iter().any(|big_f| {
            (0..x1.len()).all(|x| big_f.apply(prod.index_of(&[x, g.value(big_g.value(x))])) == Some(f.value(x)))
        })
    })
}

/// A seeded random total map on at most `max_points` points each side.
pub fn random_map(seed: u64, max_points: usize) -> TotalMap {
    let mut r = rng(seed);
    let n = (seed as usize) % (max_points + 1);
    let m = 1 + (seed as usize / 7) % max_points.max(1);
    let x = Arc::new(random_space_with(&mut r, &format!("X{seed}"), n, 0.35));
    let y = Arc::new(random_space_with(&mut r, &format!("Y{seed}"), m, 0.35));
    random_map_with(&mut r, &format!("f{seed}"), &x, &y).unwrap()
}

/// Like [`random_map`] but into a fixed codomain.
pub fn random_map_into(seed: u64, max_points: usize, y: &Arc<Space>) -> TotalMap {
    let mut r = rng(seed);
    let n = (seed as usize) % (max_points + 1);
    let x = Arc::new(random_space_with(&mut r, &format!("X{seed}"), n, 0.35));
    random_map_with(&mut r, &format!("f{seed}"), &x, y).unwrap()
}

pub fn sierpinski() -> Arc<Space> {
    Arc::new(Space::sierpinski())
}

pub fn discrete(n: usize) -> Arc<Space> {
    Arc::new(Space::discrete(n))
}

pub fn flip() -> TotalMap {
    TotalMap::new("flip", sierpinski(), discrete(2), vec![1, 0]).unwrap()
}

pub fn step() -> TotalMap {
    TotalMap::new("step", sierpinski(), discrete(2), vec![0, 1]).unwrap()
}

pub fn alternating() -> TotalMap {
    TotalMap::new("alternating", Arc::new(Space::chain(3)), discrete(2), vec![0, 1, 0]).unwrap()
}

pub fn two_valued() -> TotalMap {
    TotalMap::new("two_valued", Arc::new(Space::indiscrete(2)), discrete(2), vec![0, 1]).unwrap()
}

/// A seeded corpus with a few spaces, total and partial maps, one problem
/// and one relation.
pub fn random_corpus(seed: u64) -> Corpus {
    let mut r = rng(seed);
    let mut c = Corpus::new();
    let spaces: Vec<Arc<Space>> = (0..3)
        .map(|k| {
            let n = r.random_range(0..4usize);
            Arc::new(random_space_with(&mut r, &format!("S{k}"), if k == 0 { n + 1 } else { n }, 0.4))
        })
        .collect();
    for s in &spaces {
        c.add_space(s.clone()).unwrap();
    }
    let (x, y) = (&spaces[1], &spaces[0]);
    c.add_map(random_map_with(&mut r, "f", x, y).unwrap().into_partial()).unwrap();
    c.add_map(random_partial_map_with(&mut r, "h", &spaces[2], y, 0.6).unwrap()).unwrap();
    c.add_problem(random_problem_with(&mut r, "P", x, y, 3, 0.7).unwrap()).unwrap();
    let pairs = (0..x.len()).flat_map(|p| (0..y.len()).map(move |q| (p, q))).filter(|_| r.random_bool(0.5)).collect();
    c.add_relation(Relation::new("R", x.clone(), y.clone(), pairs).unwrap()).unwrap();
    c
}

/// `f_j ≤₂ ⌈f_i⌉` with `G(x) = (j, x)` and `F(x, (j, y)) = y`.
pub fn upper_bound_witness(family: &[TotalMap], j: usize) -> Witness2 {
    let doms = coproduct(&family.iter().map(|f| f.dom().clone()).collect::<Vec<_>>());
    let cods = coproduct(&family.iter().map(|f| f.cod().clone()).collect::<Vec<_>>());
    let fj = &family[j];
    let g = TotalMap::from_fn("G", fj.dom().clone(), doms.space.clone(), |x| doms.inject(j, x)).unwrap();
    let prod = product(&[fj.dom().clone(), cods.space.clone()]).unwrap();
    let table = (0..prod.space.len())
        .map(|p| {
            let (i, y) = cods.component_of(prod.coords(p)[1]);
            (i == j).then_some(y)
        })
        .collect();
    Witness2 { g: g.into_partial(), f: PartialMap::new("F", prod.space.clone(), fj.cod().clone(), table).unwrap() }
}

/// `⌈f_i⌉ ≤₂ g` from `f_i ≤₂ g`: `G(i, x) = G_i(x)`, `F((i, x), y) = F_i(x, y)`.
pub fn least_witness(family: &[TotalMap], g: &TotalMap, parts: &[Witness2]) -> Witness2 {
    let doms = coproduct(&family.iter().map(|f| f.dom().clone()).collect::<Vec<_>>());
    let cods = coproduct(&family.iter().map(|f| f.cod().clone()).collect::<Vec<_>>());
    let big_g = PartialMap::new(
        "G",
        doms.space.clone(),
        g.dom().clone(),
        (0..doms.space.len())
            .map(|p| {
                let (i, x) = doms.component_of(p);
                parts[i].g.apply(x)
            })
            .collect(),
    )
    .unwrap();
    let prod = product(&[doms.space.clone(), g.cod().clone()]).unwrap();
    let table = (0..prod.space.len())
        .map(|p| {
            let c = prod.coords(p);
            let (i, x) = doms.component_of(c[0]);
            let local = product(&[family[i].dom().clone(), g.cod().clone()]).unwrap();
            parts[i].f.apply(local.index_of(&[x, c[1]])).map(|y| cods.inject(i, y))
        })
        .collect();
    Witness2 { g: big_g, f: PartialMap::new("F", prod.space.clone(), cods.space.clone(), table).unwrap() }
}
