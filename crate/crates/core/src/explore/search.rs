use std::collections::HashMap;
use std::sync::Arc;

use super::enumerate::{map_classes, spaces_up_to_iso, total_maps};
use super::random::{random_map_with, random_space_with, rng};
use crate::error::{Error, Result};
use crate::invariants::{basesize, level, LevelValue, Variant};
use crate::reduce::{Item, Reducer, Reducibility};
use crate::topo::{Space, TotalMap};

/// Random candidates tried after the systematic ones.
pub const RANDOM_TRIES: usize = 2_000;

/// Largest domain enumerated exhaustively.
const EXHAUSTIVE_POINTS: usize = 4;

fn has_invariants(f: &TotalMap, lev: usize, bas: usize) -> bool {
    level(f, Variant::One) == LevelValue::Finite(lev) && basesize(f) == bas
}

/// A map with `Lev¹ = lev` and `bas = bas` on at most `max_points` points.
/// Tries, in order: every map from a space with at most four points into
/// the discrete space with `bas` points, the chain map `k ↦ k mod bas`,
/// then seeded random maps. `Ok(None)` means nothing was found, which for
/// some targets (`bas = 1 < lev`, or `bas = 0 < lev`) is because none
/// exists.
pub fn search_lev_bas_witness(lev: usize, bas: usize, max_points: usize, seed: u64) -> Result<Option<TotalMap>> {
    if bas > lev {
        return Err(Error::Precondition(format!("bas {bas} exceeds Lev {lev}")));
    }
    let cod = Arc::new(Space::discrete(bas.max(1)));
    for n in 0..=max_points.min(EXHAUSTIVE_POINTS) {
        for dom in spaces_up_to_iso(n) {
            let dom = Arc::new(dom);
            for f in total_maps(&dom, &cod, usize::MAX)? {
                if has_invariants(&f, lev, bas) {
                    return Ok(Some(f.renamed(&format!("lev{lev}_bas{bas}"))?));
                }
            }
        }
    }
    if bas >= 2 && lev <= max_points {
        let chain = Arc::new(Space::chain(lev));
        let f = TotalMap::from_fn(&format!("lev{lev}_bas{bas}"), chain, cod.clone(), |k| k % bas)?;
        if has_invariants(&f, lev, bas) {
            return Ok(Some(f));
        }
    }
    let mut r = rng(seed);
    for t in 0..RANDOM_TRIES {
        let n = 1 + t % max_points.max(1);
        let dom = Arc::new(random_space_with(&mut r, &format!("R{n}"), n.min(max_points), 0.3));
        let f = random_map_with(&mut r, &format!("lev{lev}_bas{bas}"), &dom, &cod)?;
        if has_invariants(&f, lev, bas) {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// `size` pairwise incomparable maps on at most `max_points` points.
///
/// For `≤₀` the candidates share the codomain `discrete(size)`; otherwise
/// they are the chain maps `k ↦ k mod β`, the injections of indiscrete
/// spaces into discrete ones, every map class on at most three points and
/// seeded random maps. The first antichain in candidate order is returned
/// after all pairs are re-checked.
pub fn search_antichain(
    size: usize,
    relation: Reducibility,
    max_points: usize,
    seed: u64,
    reducer: &Reducer,
) -> Result<Option<Vec<TotalMap>>> {
    if size < 2 {
        return Err(Error::Precondition("an antichain search needs size at least 2".into()));
    }
    let pool = candidates(size, relation, max_points, seed)?;
    let mut memo = HashMap::new();
    let mut chosen = Vec::new();
    if extend(&pool, size, 0, &mut chosen, &mut memo, relation, reducer)? {
        let family: Vec<TotalMap> = chosen.iter().map(|&i| pool[i].clone()).collect();
        for (i, f) in family.iter().enumerate() {
            for g in &family[i + 1..] {
                if !incomparable(f, g, relation, reducer)? {
                    return Err(Error::InvalidWitness("antichain members are comparable".into()));
                }
            }
        }
        return Ok(Some(family));
    }
    Ok(None)
}

fn candidates(size: usize, relation: Reducibility, max_points: usize, seed: u64) -> Result<Vec<TotalMap>> {
    let mut pool = Vec::new();
    let mut r = rng(seed);
    if let Reducibility::Le0 = relation {
        let cod = Arc::new(Space::discrete(size));
        for n in 1..=max_points.min(3) {
            for dom in spaces_up_to_iso(n) {
                pool.extend(total_maps(&Arc::new(dom), &cod, usize::MAX)?);
            }
        }
        for t in 0..RANDOM_TRIES / 10 {
            let n = 1 + t % max_points.max(1);
            let dom = Arc::new(random_space_with(&mut r, &format!("R{n}"), n, 0.3));
            pool.push(random_map_with(&mut r, &format!("r{t}"), &dom, &cod)?);
        }
        return Ok(pool);
    }
    for lam in 2..=max_points {
        for beta in 2..=lam {
            let cod = Arc::new(Space::discrete(beta));
            pool.push(TotalMap::from_fn(&format!("chain{lam}_mod{beta}"), Arc::new(Space::chain(lam)), cod, |k| k % beta)?);
        }
    }
    for n in 2..=max_points {
        let cod = Arc::new(Space::discrete(n));
        pool.push(TotalMap::from_fn(&format!("ind{n}"), Arc::new(Space::indiscrete(n)), cod, |k| k)?);
    }
    pool.extend(map_classes(max_points.min(3)));
    for t in 0..RANDOM_TRIES / 10 {
        let n = 1 + t % max_points.max(1);
        let dom = Arc::new(random_space_with(&mut r, &format!("R{n}"), n, 0.3));
        let m = 1 + (t / max_points.max(1)) % max_points.max(1);
        let cod = Arc::new(random_space_with(&mut r, &format!("S{m}"), m, 0.3));
        pool.push(random_map_with(&mut r, &format!("r{t}"), &dom, &cod)?);
    }
    Ok(pool)
}

fn extend(
    pool: &[TotalMap],
    size: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    memo: &mut HashMap<(usize, usize), bool>,
    relation: Reducibility,
    reducer: &Reducer,
) -> Result<bool> {
    if chosen.len() == size {
        return Ok(true);
    }
    for i in from..pool.len() {
        let mut ok = true;
        for &j in chosen.iter() {
            let key = (j, i);
            let inc = match memo.get(&key) {
                Some(&b) => b,
                None => {
                    let b = incomparable(&pool[j], &pool[i], relation, reducer)?;
                    memo.insert(key, b);
                    b
                }
            };
            if !inc {
                ok = false;
                break;
            }
        }
        if ok {
            chosen.push(i);
            if extend(pool, size, i + 1, chosen, memo, relation, reducer)? {
                return Ok(true);
            }
            chosen.pop();
        }
    }
    Ok(false)
}

fn incomparable(f: &TotalMap, g: &TotalMap, relation: Reducibility, reducer: &Reducer) -> Result<bool> {
    let (a, b) = (Item::Map(f.clone()), Item::Map(g.clone()));
    Ok(reducer.reduces(&a, &b, relation)?.is_none() && reducer.reduces(&b, &a, relation)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lev_bas_targets() {
        let f = search_lev_bas_witness(1, 1, 3, 0).unwrap().unwrap();
        assert!(f.is_continuous() && !f.dom().is_empty());
        let g = search_lev_bas_witness(3, 2, 4, 0).unwrap().unwrap();
        assert_eq!(level(&g, Variant::One), LevelValue::Finite(3));
        assert_eq!(basesize(&g), 2);
        assert!(search_lev_bas_witness(2, 3, 4, 0).is_err());
    }

    #[test]
    fn impossible_target_is_not_found() {
        assert!(search_lev_bas_witness(2, 1, 3, 0).unwrap().is_none());
    }

    #[test]
    fn antichains() {
        let r = Reducer::default();
        let pair = search_antichain(2, Reducibility::Le0, 3, 0, &r).unwrap().unwrap();
        assert_eq!(pair.len(), 2);
        let two = search_antichain(2, Reducibility::Le2, 4, 0, &r).unwrap().unwrap();
        assert!(two.iter().all(|f| f.dom().len() <= 4));
        assert!(search_antichain(1, Reducibility::Le2, 4, 0, &r).is_err());
    }
}
