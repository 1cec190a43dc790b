use super::search::{Counter, PointCsp};
use super::{Reducer, Witness2};
use crate::error::Result;
use crate::topo::{product, PartialMap, Problem, TotalMap};

impl Reducer {
    /// Decides `f ≤₂ g` with the pairwise criterion: a total monotone
    /// `G: X₁ → X₂` such that `x ≤ x'` and `g(G(x)) ≤ g(G(x'))` force
    /// `f(x) ≤ f(x')`. `F` is then tabulated as `F(x, g(G(x))) = f(x)`.
    pub fn le2_fn(&self, f: &TotalMap, g: &TotalMap) -> Result<Option<Witness2>> {
        let (x1, x2) = (f.dom(), g.dom());
        let (y1, y2) = (f.cod(), g.cod());
        let candidates = vec![(0..x2.len()).map(Some).collect::<Vec<_>>(); x1.len()];
        let compatible = |a: usize, va: Option<usize>, b: usize, vb: Option<usize>| {
            let (va, vb) = (va.expect("total"), vb.expect("total"));
            let (ga, gb) = (g.value(va), g.value(vb));
            let forward = !x1.is_below(a, b)
                || (x2.is_below(va, vb) && (!y2.is_below(ga, gb) || y1.is_below(f.value(a), f.value(b))));
            let backward = !x1.is_below(b, a)
                || (x2.is_below(vb, va) && (!y2.is_below(gb, ga) || y1.is_below(f.value(b), f.value(a))));
            forward && backward
        };
        let csp = PointCsp { candidates, compatible: &compatible };
        let mut counter = Counter::new(self.budget);
        let Some(table) = csp.solve(&x1.components(), &mut counter)? else {
            return Ok(None);
        };
        let g_map = PartialMap::new("G", x1.clone(), x2.clone(), table)?;
        let prod = product(&[x1.clone(), y2.clone()])?;
        let mut f_table = vec![None; prod.space.len()];
        for a in 0..x1.len() {
            let b = g_map.apply(a).expect("total");
            f_table[prod.index_of(&[a, g.value(b)])] = Some(f.value(a));
        }
        let f_map = PartialMap::new("F", prod.space.clone(), y1.clone(), f_table)?;
        Ok(Some(Witness2 { g: g_map, f: f_map }))
    }

    /// Decides `P ≤₂ Q`: continuous partial `F`, `G` such that for every
    /// `g ∈ Q` the map `x ↦ F(x, g(G(x)))` belongs to `P`. The composite is
    /// defined at `x` iff `G(x)`, `g(G(x))` and `F(x, g(G(x)))` all are.
    pub fn le2_problem(&self, p: &Problem, q: &Problem) -> Result<Option<Witness2>> {
        let (x1, x2) = (p.dom(), q.dom());
        let (y1, y2) = (p.cod(), q.cod());
        let prod = product(&[x1.clone(), y2.clone()])?;
        let mut counter = Counter::new(self.budget);
        let found = if q.is_empty() {
            Some((vec![None; x1.len()], vec![None; prod.space.len()]))
        } else if p.is_empty() {
            None
        } else {
            let mut state = Le2State {
                g: vec![None; x1.len()],
                f: vec![Slot::Free; prod.space.len()],
                assigned_f: Vec::new(),
            };
            let alive = vec![(0..p.len()).collect::<Vec<usize>>(); q.len()];
            let ctx = Le2Search { p, q, ny2: y2.len() };
            ctx.point(0, &mut state, alive, &mut counter)?.then(|| {
                let f = state.f.iter().map(|s| if let Slot::Val(v) = s { Some(*v) } else { None }).collect();
                (state.g, f)
            })
        };
        match found {
            Some((g_table, f_table)) => Ok(Some(Witness2 {
                g: PartialMap::new("G", x1.clone(), x2.clone(), g_table)?,
                f: PartialMap::new("F", prod.space.clone(), y1.clone(), f_table)?,
            })),
            None => Ok(None),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Free,
    Undef,
    Val(usize),
}

struct Le2State {
    g: Vec<Option<usize>>,
    f: Vec<Slot>,
    /// Product points with `F` fixed, in assignment order.
    assigned_f: Vec<(usize, usize)>,
}

struct Le2Search<'a> {
    p: &'a Problem,
    q: &'a Problem,
    ny2: usize,
}

impl Le2Search<'_> {
    fn x1(&self) -> &crate::topo::Space {
        self.p.dom()
    }

    fn point(&self, a: usize, state: &mut Le2State, alive: Vec<Vec<usize>>, counter: &mut Counter) -> Result<bool> {
        if a == state.g.len() {
            return Ok(true);
        }
        let x2 = self.q.dom();
        for v in std::iter::once(None).chain((0..x2.len()).map(Some)) {
            counter.tick()?;
            let monotone = (0..a).all(|b| match (v, state.g[b]) {
                (Some(va), Some(vb)) => {
                    (!self.x1().is_below(a, b) || x2.is_below(va, vb))
                        && (!self.x1().is_below(b, a) || x2.is_below(vb, va))
                }
                _ => true,
            });
            if !monotone {
                continue;
            }
            state.g[a] = v;
            let mut ys: Vec<usize> = match v {
                Some(b) => self.q.members().iter().filter_map(|g| g.apply(b)).collect(),
                None => Vec::new(),
            };
            ys.sort_unstable();
            ys.dedup();
            if self.fvalues(a, &ys, 0, state, &alive, counter)? {
                return Ok(true);
            }
        }
        state.g[a] = None;
        Ok(false)
    }

    /// Chooses `F(a, ys[k])` for the remaining `k`, then filters `alive`.
    fn fvalues(
        &self,
        a: usize,
        ys: &[usize],
        k: usize,
        state: &mut Le2State,
        alive: &[Vec<usize>],
        counter: &mut Counter,
    ) -> Result<bool> {
        if k == ys.len() {
            let Some(next) = self.filter_alive(a, state, alive) else {
                return Ok(false);
            };
            return self.point(a + 1, state, next, counter);
        }
        let y = ys[k];
        let idx = a * self.ny2 + y;
        let y1 = self.p.cod();
        let y2 = self.q.cod();
        for slot in std::iter::once(Slot::Undef).chain((0..y1.len()).map(Slot::Val)) {
            counter.tick()?;
            let ok = match slot {
                Slot::Val(val) => state.assigned_f.iter().all(|&(b, yb)| {
                    let Slot::Val(other) = state.f[b * self.ny2 + yb] else { return true };
                    (!(self.x1().is_below(a, b) && y2.is_below(y, yb)) || y1.is_below(val, other))
                        && (!(self.x1().is_below(b, a) && y2.is_below(yb, y)) || y1.is_below(other, val))
                }),
                _ => true,
            };
            if !ok {
                continue;
            }
            state.f[idx] = slot;
            state.assigned_f.push((a, y));
            let done = self.fvalues(a, ys, k + 1, state, alive, counter)?;
            state.assigned_f.pop();
            if done {
                return Ok(true);
            }
        }
        state.f[idx] = Slot::Free;
        Ok(false)
    }

    fn filter_alive(&self, a: usize, state: &Le2State, alive: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
        self.q
            .members()
            .iter()
            .zip(alive)
            .map(|(g, live)| {
                let h = state.g[a].and_then(|b| g.apply(b)).and_then(|y| match state.f[a * self.ny2 + y] {
                    Slot::Val(v) => Some(v),
                    _ => None,
                });
                let kept: Vec<usize> = live.iter().copied().filter(|&m| self.p.members()[m].apply(a) == h).collect();
                (!kept.is_empty()).then_some(kept)
            })
            .collect()
    }
}
