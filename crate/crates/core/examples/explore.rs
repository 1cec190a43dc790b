//! The experimental side: splitting a map along its level sets, the finite
//! admissibility test, and searches for maps with given invariants and for
//! antichains of degrees.

use std::sync::Arc;

use contred::explore::{admissible, decompose_by_level, search_antichain, search_lev_bas_witness};
use contred::invariants::report;
use contred::reduce::{Reducer, Reducibility};
use contred::topo::{PartialMap, Space, TotalMap, DEFAULT_MEMBER_CAP};
use contred::Result;

fn main() -> Result<()> {
    let r = Reducer::default();

    let f = TotalMap::from_fn("chain4_mod2", Arc::new(Space::chain(4)), Arc::new(Space::discrete(2)), |k| k % 2)?;
    let d = decompose_by_level(&f, &[1, 2], &r)?;
    for (l, part) in d.level_sets.iter().zip(&d.parts) {
        println!("level set {:?}, remaining part on {} points", f.dom().names_of(l), part.dom().len());
    }
    println!("{} equivalent to the supremum of its parts: {}", f.name(), d.equivalent());

    let y = Arc::new(Space::discrete(2));
    let s2 = Arc::new(Space::sierpinski());
    for table in [vec![Some(0), Some(1)], vec![Some(0), Some(0)], vec![Some(1), None]] {
        let g = PartialMap::new("g", y.clone(), s2.clone(), table.clone())?;
        println!("D2 -> S2 {:?}: admissible {}", table, admissible(&g, &r, DEFAULT_MEMBER_CAP)?);
    }

    for (lev, bas) in [(2, 2), (3, 2), (4, 3), (2, 1)] {
        match search_lev_bas_witness(lev, bas, 5, 1)? {
            Some(w) => {
                let rep = report(&w);
                println!("Lev {lev}, bas {bas}: {} on {} points ({} {})", w.name(), w.dom().len(), rep.lev1, rep.bas);
            }
            None => println!("Lev {lev}, bas {bas}: none"),
        }
    }

    if let Some(family) = search_antichain(3, Reducibility::Le2, 4, 1, &r)? {
        let names: Vec<&str> = family.iter().map(|f| f.name()).collect();
        println!("≤₂ antichain: {}", names.join(", "));
    }
    Ok(())
}
