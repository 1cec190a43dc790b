//! Suprema for ≤₂ and ≤₀, the fibered infimum for ≤₀, and a pair of maps
//! whose problem has no binary infimum.

use std::sync::Arc;

use contred::lattice::{inf0, sup0, sup2, TaggedFamily};
use contred::reduce::{le2_fn, le2_problem};
use contred::topo::{Problem, Space, TotalMap};
use contred::Result;

fn main() -> Result<()> {
    let s2 = Arc::new(Space::sierpinski());
    let d2 = Arc::new(Space::discrete(2));
    let flip = TotalMap::new("flip", s2.clone(), d2.clone(), vec![1, 0])?;
    let step = TotalMap::new("step", s2, d2.clone(), vec![0, 1])?;
    let family = TaggedFamily::tagged(vec![("a".into(), flip.clone()), ("b".into(), step.clone())])?;

    let s = sup2(&family)?;
    println!("sup2: {:?}", s);
    for f in [&flip, &step] {
        println!("  {} ≤₂ sup2: {}", f.name(), le2_fn(f, &s)?.is_some());
    }
    println!("sup0: {:?}", sup0(&d2, &family)?);
    println!("inf0: {:?}", inf0(&d2, &family)?);

    // Two ≤₂-incomparable maps of the same type. The problem {f, g} lies
    // below both singletons, so the pair has no greatest lower bound among maps.
    let x = Arc::new(Space::chain(4));
    let y = Arc::new(Space::discrete(3));
    let f = TotalMap::new("up3", x.clone(), y.clone(), vec![0, 1, 2, 2])?;
    let g = TotalMap::new("alt4", x.clone(), y.clone(), vec![0, 1, 0, 1])?;
    println!("\nup3 ≤₂ alt4: {}, alt4 ≤₂ up3: {}", le2_fn(&f, &g)?.is_some(), le2_fn(&g, &f)?.is_some());
    let both = Problem::new("FG", x, y, vec![f.clone().into_partial(), g.clone().into_partial()])?;
    for one in [&f, &g] {
        println!("{{up3, alt4}} ≤₂ {{{}}}: {}", one.name(), le2_problem(&both, &Problem::of_total(one))?.is_some());
    }
    Ok(())
}
