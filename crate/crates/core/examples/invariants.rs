//! Level sets, Levels and Basesize of a few small maps.

use std::sync::Arc;

use contred::invariants::report;
use contred::topo::{Space, TotalMap};
use contred::Result;

fn main() -> Result<()> {
    let d2 = Arc::new(Space::discrete(2));
    let maps = [
        TotalMap::new("flip", Arc::new(Space::sierpinski()), d2.clone(), vec![1, 0])?,
        TotalMap::new("alternating", Arc::new(Space::chain(3)), d2.clone(), vec![0, 1, 0])?,
        // Not T0: the two points cannot be separated, so no level set ever empties.
        TotalMap::new("two_valued", Arc::new(Space::indiscrete(2)), d2.clone(), vec![0, 1])?,
        TotalMap::from_fn("chain5_mod3", Arc::new(Space::chain(5)), Arc::new(Space::discrete(3)), |k| k % 3)?,
    ];
    for f in &maps {
        let r = report(f);
        println!("{}: Lev1 {}  Lev2 {}  bas {}", f.name(), r.lev1, r.lev2, r.bas);
        for (x, (l1, l2)) in &r.pointwise {
            println!("  {:<3} lev1 {l1:<9} lev2 {l2:<9} part {}", f.dom().point(*x), r.coloring.colors[*x].expect("total map"));
        }
    }
    Ok(())
}
