//! Exhaustive enumeration of small spaces and maps.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::topo::{numbered, PartialMap, Space, TotalMap};

/// Every preorder on `n` labelled points (29 for `n = 3`, 355 for `n = 4`).
pub fn labelled_spaces(n: usize) -> Vec<Space> {
    preorders(n).into_iter().enumerate().map(|(i, rel)| space_from_bits(&format!("P{n}_{i}"), n, &rel)).collect()
}

/// One preorder per isomorphism class on `n` points (9 for `n = 3`).
pub fn spaces_up_to_iso(n: usize) -> Vec<Space> {
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for rel in preorders(n) {
        let canon = perms.iter().map(|p| permute_relation(&rel, n, p)).min().expect("at least one permutation");
        if seen.insert(canon.clone()) {
            out.push(space_from_bits(&format!("T{n}_{}", out.len()), n, &canon));
        }
    }
    out
}

/// All spaces with at most `max_points` points, one per isomorphism class.
pub fn small_spaces(max_points: usize) -> Vec<Arc<Space>> {
    (0..=max_points).flat_map(spaces_up_to_iso).map(Arc::new).collect()
}

fn preorders(n: usize) -> Vec<Vec<bool>> {
    let off: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << off.len() {
        let mut rel = vec![false; n * n];
        for i in 0..n {
            rel[i * n + i] = true;
        }
        for (k, &(i, j)) in off.iter().enumerate() {
            rel[i * n + j] = mask >> k & 1 == 1;
        }
        let transitive = (0..n).all(|i| {
            (0..n).all(|j| !rel[i * n + j] || (0..n).all(|k| !rel[j * n + k] || rel[i * n + k]))
        });
        if transitive {
            out.push(rel);
        }
    }
    out
}

fn space_from_bits(name: &str, n: usize, rel: &[bool]) -> Space {
    Space::from_closed(name.to_string(), numbered(n), rel.to_vec())
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Relation with point `i` renamed to `perm[i]`.
fn permute_relation(rel: &[bool], n: usize, perm: &[usize]) -> Vec<bool> {
    let mut out = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            out[perm[i] * n + perm[j]] = rel[i * n + j];
        }
    }
    out
}

fn automorphisms(space: &Space) -> Vec<Vec<usize>> {
    let n = space.len();
    permutations(n)
        .into_iter()
        .filter(|p| (0..n).all(|i| (0..n).all(|j| space.is_below(i, j) == space.is_below(p[i], p[j]))))
        .collect()
}

/// Every total map `dom → cod`, in lexicographic order of tables.
pub fn total_maps(dom: &Arc<Space>, cod: &Arc<Space>, cap: usize) -> Result<Vec<TotalMap>> {
    let count = checked_pow(cod.len(), dom.len());
    if count.is_none_or(|c| c > cap) {
        return Err(Error::Capacity { what: format!("maps {} -> {}", dom.name(), cod.name()), cap });
    }
    let n = dom.len();
    let mut out = Vec::new();
    let mut table = vec![0usize; n];
    if n > 0 && cod.is_empty() {
        return Ok(out);
    }
    loop {
        out.push(TotalMap::new(&format!("m{}", out.len()), dom.clone(), cod.clone(), table.clone())?);
        if !odometer(&mut table, cod.len()) {
            return Ok(out);
        }
    }
}

/// Every partial map `dom → cod`, undefined entries ordered first.
pub fn partial_maps(dom: &Arc<Space>, cod: &Arc<Space>, cap: usize) -> Result<Vec<PartialMap>> {
    let count = checked_pow(cod.len() + 1, dom.len());
    if count.is_none_or(|c| c > cap) {
        return Err(Error::Capacity { what: format!("partial maps {} -> {}", dom.name(), cod.name()), cap });
    }
    let mut out = Vec::new();
    let mut table = vec![0usize; dom.len()];
    loop {
        let t = table.iter().map(|&v| v.checked_sub(1)).collect();
        out.push(PartialMap::new(&format!("m{}", out.len()), dom.clone(), cod.clone(), t)?);
        if !odometer(&mut table, cod.len() + 1) {
            return Ok(out);
        }
    }
}

/// Every continuous partial map `dom → cod`.
pub fn continuous_partial_maps(dom: &Arc<Space>, cod: &Arc<Space>, cap: usize) -> Result<Vec<PartialMap>> {
    let mut maps: Vec<PartialMap> =
        partial_maps(dom, cod, cap)?.into_iter().filter(PartialMap::is_continuous).collect();
    for (i, m) in maps.iter_mut().enumerate() {
        *m = m.renamed(&format!("c{i}"))?;
    }
    Ok(maps)
}

/// One total map per isomorphism class of maps between spaces with at most
/// `max_points` points. Isomorphic maps (related by homeomorphisms of domain
/// and codomain) are interchangeable for every reducibility handled here.
pub fn map_classes(max_points: usize) -> Vec<TotalMap> {
    let spaces = small_spaces(max_points);
    let mut out = Vec::new();
    for dom in &spaces {
        let auts_dom = automorphisms(dom);
        for cod in &spaces {
            let auts_cod = automorphisms(cod);
            let mut seen = BTreeSet::new();
            for f in total_maps(dom, cod, usize::MAX).expect("small") {
                let values = f.values();
                let canon = auts_dom
                    .iter()
                    .flat_map(|s| {
                        let values = &values;
                        auts_cod.iter().map(move |t| {
                            let mut v = vec![0; values.len()];
                            for (x, &y) in values.iter().enumerate() {
                                v[s[x]] = t[y];
                            }
                            v
                        })
                    })
                    .min()
                    .expect("identity automorphism");
                if seen.insert(canon.clone()) {
                    let name = format!("{}_{}_{}", dom.name(), cod.name(), seen.len() - 1);
                    out.push(TotalMap::new(&name, dom.clone(), cod.clone(), canon).expect("valid"));
                }
            }
        }
    }
    out
}

fn checked_pow(base: usize, exp: usize) -> Option<usize> {
    (0..exp).try_fold(1usize, |acc, _| acc.checked_mul(base))
}

fn odometer(table: &mut [usize], base: usize) -> bool {
    for slot in table.iter_mut().rev() {
        *slot += 1;
        if *slot < base {
            return true;
        }
        *slot = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preorder_counts() {
        let labelled: Vec<usize> = (0..5).map(|n| labelled_spaces(n).len()).collect();
        assert_eq!(labelled, vec![1, 1, 4, 29, 355]);
        let classes: Vec<usize> = (0..5).map(|n| spaces_up_to_iso(n).len()).collect();
        assert_eq!(classes, vec![1, 1, 3, 9, 33]);
    }

    #[test]
    fn map_counts() {
        let d = Arc::new(Space::discrete(2));
        let c = Arc::new(Space::chain(3));
        assert_eq!(total_maps(&c, &d, 100).unwrap().len(), 8);
        assert_eq!(partial_maps(&c, &d, 100).unwrap().len(), 27);
        assert!(total_maps(&c, &d, 7).is_err());
        let e = Arc::new(Space::empty("E").unwrap());
        assert_eq!(total_maps(&e, &e, 1).unwrap().len(), 1);
        assert!(total_maps(&d, &e, 1).unwrap().is_empty());
    }

    #[test]
    fn continuous_partial_maps_into_sierpinski() {
        let s = Arc::new(Space::sierpinski());
        // 9 partial maps, only the defined pair (s1 -> s0, s0 -> s1) fails.
        assert_eq!(continuous_partial_maps(&s, &s, 100).unwrap().len(), 8);
    }

    #[test]
    fn automorphism_groups() {
        assert_eq!(automorphisms(&Arc::new(Space::discrete(3))).len(), 6);
        assert_eq!(automorphisms(&Arc::new(Space::chain(3))).len(), 1);
        assert_eq!(permutations(3).len(), 6);
    }

    #[test]
    fn map_classes_are_fewer_than_maps() {
        let spaces = small_spaces(2);
        let all: usize = spaces
            .iter()
            .flat_map(|d| spaces.iter().map(move |c| total_maps(d, c, usize::MAX).unwrap().len()))
            .sum();
        let classes = map_classes(2).len();
        assert!(classes > 0 && classes < all);
    }
}
