use super::search::{Counter, PointCsp};
use super::{Reducer, Witness0};
use crate::error::{Error, Result};
use crate::topo::{PartialMap, Problem, TotalMap};

impl Reducer {
    /// Decides `f ≤₀ g`: is there a continuous total `G` with `f = g ∘ G`?
    pub fn le0_fn(&self, f: &TotalMap, g: &TotalMap) -> Result<Option<Witness0>> {
        check_codomains(f.as_partial(), g.as_partial())?;
        let (x, y) = (f.dom(), g.dom());
        let candidates = (0..x.len())
            .map(|p| (0..y.len()).filter(|&q| g.value(q) == f.value(p)).map(Some).collect())
            .collect();
        let compatible = |a: usize, va: Option<usize>, b: usize, vb: Option<usize>| {
            let (va, vb) = (va.expect("total"), vb.expect("total"));
            (!x.is_below(a, b) || y.is_below(va, vb)) && (!x.is_below(b, a) || y.is_below(vb, va))
        };
        let csp = PointCsp { candidates, compatible: &compatible };
        let mut counter = Counter::new(self.budget);
        let Some(table) = csp.solve(&x.components(), &mut counter)? else {
            return Ok(None);
        };
        let g_map = PartialMap::new("G", x.clone(), y.clone(), table)?;
        Ok(Some(Witness0 { g: g_map }))
    }

    /// Decides `P ≤₀ Q`: one continuous partial `G` with `g ∘ G ∈ P` for
    /// every `g ∈ Q`.
    pub fn le0_problem(&self, p: &Problem, q: &Problem) -> Result<Option<Witness0>> {
        if p.cod() != q.cod() {
            return Err(Error::CodomainMismatch { left: p.cod().name().into(), right: q.cod().name().into() });
        }
        let (x, y) = (p.dom(), q.dom());
        let mut counter = Counter::new(self.budget);
        if q.is_empty() {
            return Ok(Some(Witness0 { g: PartialMap::nowhere("G", x.clone(), y.clone())? }));
        }
        if p.is_empty() {
            return Ok(None);
        }
        let monotone = |a: usize, va: Option<usize>, b: usize, vb: Option<usize>| match (va, vb) {
            (Some(va), Some(vb)) => {
                (!x.is_below(a, b) || y.is_below(va, vb)) && (!x.is_below(b, a) || y.is_below(vb, va))
            }
            _ => true,
        };
        let options: Vec<Option<usize>> = std::iter::once(None).chain((0..y.len()).map(Some)).collect();
        let table = if p.len() == 1 {
            // Membership in a singleton is a pointwise condition.
            let target = &p.members()[0];
            let candidates = (0..x.len())
                .map(|a| {
                    options
                        .iter()
                        .copied()
                        .filter(|v| q.members().iter().all(|g| v.and_then(|b| g.apply(b)) == target.apply(a)))
                        .collect()
                })
                .collect();
            let csp = PointCsp { candidates, compatible: &monotone };
            csp.solve(&x.components(), &mut counter)?
        } else {
            let alive: Vec<Vec<usize>> = vec![(0..p.len()).collect(); q.len()];
            let mut table = vec![None; x.len()];
            let ctx = Le0Search { p, q, options: &options, monotone: &monotone };
            ctx.search(0, &mut table, alive, &mut counter)?.then_some(table)
        };
        match table {
            Some(table) => Ok(Some(Witness0 { g: PartialMap::new("G", x.clone(), y.clone(), table)? })),
            None => Ok(None),
        }
    }
}

pub(crate) fn check_codomains(f: &PartialMap, g: &PartialMap) -> Result<()> {
    if f.cod() != g.cod() {
        return Err(Error::CodomainMismatch { left: f.cod().name().into(), right: g.cod().name().into() });
    }
    Ok(())
}

type Monotone<'a> = dyn Fn(usize, Option<usize>, usize, Option<usize>) -> bool + 'a;

struct Le0Search<'a> {
    p: &'a Problem,
    q: &'a Problem,
    options: &'a [Option<usize>],
    monotone: &'a Monotone<'a>,
}

impl Le0Search<'_> {
    /// `alive[k]` lists the members of `P` that still agree with `q_k ∘ G`.
    fn search(
        &self,
        a: usize,
        table: &mut [Option<usize>],
        alive: Vec<Vec<usize>>,
        counter: &mut Counter,
    ) -> Result<bool> {
        if a == table.len() {
            return Ok(true);
        }
        for &v in self.options {
            counter.tick()?;
            if !(0..a).all(|b| (self.monotone)(a, v, b, table[b])) {
                continue;
            }
            let next: Option<Vec<Vec<usize>>> = self
                .q
                .members()
                .iter()
                .zip(&alive)
                .map(|(g, live)| {
                    let h = v.and_then(|b| g.apply(b));
                    let kept: Vec<usize> =
                        live.iter().copied().filter(|&m| self.p.members()[m].apply(a) == h).collect();
                    (!kept.is_empty()).then_some(kept)
                })
                .collect();
            if let Some(next) = next {
                table[a] = v;
                if self.search(a + 1, table, next, counter)? {
                    return Ok(true);
                }
            }
        }
        table[a] = None;
        Ok(false)
    }
}
