use std::collections::BTreeSet;

use crate::topo::PartialMap;

/// Pairs `{x, y}` (stored with `x < y`) of defined points that cannot share
/// a piece of a partition: one is below the other but the values are not
/// ordered the same way. A restriction of `f` is continuous exactly when it
/// contains no such pair.
pub fn conflict_graph(f: &PartialMap) -> BTreeSet<(usize, usize)> {
    let x = f.dom();
    let y = f.cod();
    let mut edges = BTreeSet::new();
    for (p, q) in x.below_pairs() {
        if let (Some(fp), Some(fq)) = (f.apply(p), f.apply(q)) {
            if p != q && !y.is_below(fp, fq) {
                edges.insert((p.min(q), p.max(q)));
            }
        }
    }
    edges
}

/// A minimum partition of the domain of `f` into pieces on which `f` is
/// continuous, given as one color per point (`None` where `f` is undefined).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<Option<usize>>,
    pub count: usize,
}

impl Coloring {
    pub fn classes(&self) -> Vec<BTreeSet<usize>> {
        let mut out = vec![BTreeSet::new(); self.count];
        for (p, c) in self.colors.iter().enumerate() {
            if let Some(c) = c {
                out[*c].insert(p);
            }
        }
        out
    }
}

/// `bas(f)` together with an optimal partition. The chromatic number is
/// found by trying `k` colors for `k` from a clique bound up to the greedy
/// bound; vertices go in index order and colors ascending, so the result
/// is deterministic.
pub fn basesize_coloring(f: &PartialMap) -> Coloring {
    let vertices: Vec<usize> = f.defined_on().into_iter().collect();
    let n = vertices.len();
    let pos = |p: usize| vertices.binary_search(&p).expect("defined");
    let mut adj = vec![vec![false; n]; n];
    for (p, q) in conflict_graph(f) {
        adj[pos(p)][pos(q)] = true;
        adj[pos(q)][pos(p)] = true;
    }
    let greedy = greedy_coloring(&adj);
    let upper = greedy.iter().max().map_or(0, |c| c + 1);
    let mut best = greedy;
    for k in clique_bound(&adj)..upper {
        let mut colors = vec![usize::MAX; n];
        if color_with(&adj, k, 0, 0, &mut colors) {
            best = colors;
            break;
        }
    }
    let count = best.iter().max().map_or(0, |c| c + 1);
    let mut colors = vec![None; f.dom().len()];
    for (i, &p) in vertices.iter().enumerate() {
        colors[p] = Some(best[i]);
    }
    Coloring { colors, count }
}

/// `bas(f)`.
pub fn basesize(f: &PartialMap) -> usize {
    basesize_coloring(f).count
}

fn greedy_coloring(adj: &[Vec<bool>]) -> Vec<usize> {
    let n = adj.len();
    let mut colors = vec![usize::MAX; n];
    for v in 0..n {
        colors[v] = (0..).find(|&c| (0..v).all(|u| !adj[v][u] || colors[u] != c)).expect("unbounded range");
    }
    colors
}

/// Size of a greedily grown clique, the best over all starting vertices.
fn clique_bound(adj: &[Vec<bool>]) -> usize {
    let n = adj.len();
    (0..n)
        .map(|start| {
            let mut clique = vec![start];
            for v in 0..n {
                if v != start && clique.iter().all(|&u| adj[u][v]) {
                    clique.push(v);
                }
            }
            clique.len()
        })
        .max()
        .unwrap_or(0)
}

/// Colors vertices `v..` with colors below `k`. A vertex never opens more
/// than one new color, which removes color permutations from the search.
fn color_with(adj: &[Vec<bool>], k: usize, v: usize, used: usize, colors: &mut [usize]) -> bool {
    if v == adj.len() {
        return true;
    }
    for c in 0..k.min(used + 1) {
        if (0..v).all(|u| !adj[v][u] || colors[u] != c) {
            colors[v] = c;
            if color_with(adj, k, v + 1, used.max(c + 1), colors) {
                return true;
            }
        }
    }
    colors[v] = usize::MAX;
    false
}
