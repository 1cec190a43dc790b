//! Brute-force decider for `≤₂` on total maps, kept independent of the
//! pairwise criterion used by [`Reducer::le2_fn`].
//!
//! Every total map `G: X₁ → X₂` is enumerated and tested for continuity by
//! pulling back each open set of `X₂`. For a continuous `G` the equation
//! fixes `F` on `D = {(x, g(G(x)))}`; values of `F` off `D` never enter the
//! composite, and restricting a continuous partial map keeps it continuous,
//! so `F` may be taken with domain exactly `D`. Its continuity is tested by
//! pulling back each open set of `Y₁` into the subspace `D` of `X₁ × Y₂`.

use super::search::Counter;
use super::{Reducer, Witness2};
use crate::error::{Error, Result};
use crate::topo::{product, PartialMap, Space, TotalMap};

/// Bitmask view of a space with at most 64 points.
struct Masks {
    /// `up[x]`: the smallest open set containing `x`.
    up: Vec<u64>,
    opens: Vec<u64>,
}

impl Masks {
    fn new(space: &Space) -> Result<Masks> {
        if space.len() > 16 {
            return Err(Error::Capacity { what: format!("oracle enumeration over `{}`", space.name()), cap: 16 });
        }
        let up: Vec<u64> = (0..space.len())
            .map(|x| space.up_set(x).iter().fold(0u64, |m, &y| m | 1 << y))
            .collect();
        let opens = space.open_sets().iter().map(|s| s.iter().fold(0u64, |m, &y| m | 1 << y)).collect();
        Ok(Masks { up, opens })
    }

    fn is_open(&self, set: u64) -> bool {
        (0..self.up.len()).all(|x| set >> x & 1 == 0 || self.up[x] & !set == 0)
    }
}

impl Reducer {
    /// Brute-force `f ≤₂ g`. Returns the witness with the lexicographically
    /// least `G`, the same one the fast engine returns.
    pub fn le2_fn_oracle(&self, f: &TotalMap, g: &TotalMap) -> Result<Option<Witness2>> {
        let (x1, x2) = (f.dom(), g.dom());
        let (y1, y2) = (f.cod(), g.cod());
        let m1 = Masks::new(x1)?;
        let m2 = Masks::new(x2)?;
        let n1 = x1.len();
        let n2 = x2.len();
        // Product order on X₁ × Y₂, restricted later to D.
        let prod_below = |a: usize, ya: usize, b: usize, yb: usize| x1.is_below(a, b) && y2.is_below(ya, yb);
        let cod_opens: Vec<u64> = y1.open_sets().iter().map(|s| s.iter().fold(0u64, |m, &y| m | 1 << y)).collect();
        let mut counter = Counter::new(self.budget);

        if n1 > 0 && n2 == 0 {
            return Ok(None);
        }
        let mut table = vec![0usize; n1];
        loop {
            counter.tick()?;
            let g_continuous = m2.opens.iter().all(|&u| {
                let pre = (0..n1).filter(|&a| u >> table[a] & 1 == 1).fold(0u64, |m, a| m | 1 << a);
                m1.is_open(pre)
            });
            if g_continuous {
                let d: Vec<usize> = (0..n1).map(|a| g.value(table[a])).collect();
                // A set S ⊆ D is open in the subspace D iff it is the trace of
                // its up-closure in the product.
                let f_continuous = cod_opens.iter().all(|&v| {
                    let pre: Vec<bool> = (0..n1).map(|a| v >> f.value(a) & 1 == 1).collect();
                    (0..n1).all(|a| !pre[a] || (0..n1).all(|b| !prod_below(a, d[a], b, d[b]) || pre[b]))
                });
                if f_continuous {
                    return self.assemble(f, g, &table).map(Some);
                }
            }
            if !advance(&mut table, n2) {
                return Ok(None);
            }
        }
    }

    fn assemble(&self, f: &TotalMap, g: &TotalMap, table: &[usize]) -> Result<Witness2> {
        let prod = product(&[f.dom().clone(), g.cod().clone()])?;
        let mut f_table = vec![None; prod.space.len()];
        for (a, &b) in table.iter().enumerate() {
            f_table[prod.index_of(&[a, g.value(b)])] = Some(f.value(a));
        }
        Ok(Witness2 {
            g: PartialMap::new("G", f.dom().clone(), g.dom().clone(), table.iter().copied().map(Some).collect())?,
            f: PartialMap::new("F", prod.space.clone(), f.cod().clone(), f_table)?,
        })
    }
}

/// Odometer step over `base^len`, first position most significant.
fn advance(table: &mut [usize], base: usize) -> bool {
    for slot in table.iter_mut().rev() {
        *slot += 1;
        if *slot < base {
            return true;
        }
        *slot = 0;
    }
    false
}
