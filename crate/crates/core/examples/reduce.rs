//! Compare three maps into the discrete two-point space under each
//! reducibility and print the reduction data that was found.

use std::sync::Arc;

use contred::reduce::{le0_fn, le2_fn, le_ct, CtVerdict};
use contred::topo::{Space, TotalMap};
use contred::Result;

fn main() -> Result<()> {
    let s2 = Arc::new(Space::sierpinski());
    let d2 = Arc::new(Space::discrete(2));
    let chain = Arc::new(Space::chain(3));

    let flip = TotalMap::new("flip", s2.clone(), d2.clone(), vec![1, 0])?;
    let step = TotalMap::new("step", s2, d2.clone(), vec![0, 1])?;
    let alternating = TotalMap::new("alternating", chain, d2, vec![0, 1, 0])?;
    let maps = [&flip, &step, &alternating];

    for f in maps {
        for g in maps {
            let le0 = le0_fn(f, g)?.is_some();
            let le2 = le2_fn(f, g)?.is_some();
            let ct = match le_ct(f, g, 3)? {
                CtVerdict::Yes { power, .. } => format!("yes (power {power})"),
                CtVerdict::NoUpToCap(cap) => format!("no up to {cap}"),
            };
            println!("{:>11} vs {:<11}  le0 {le0:<5}  le2 {le2:<5}  lect {ct}", f.name(), g.name());
        }
    }

    // flip and step are ≤₂-equivalent but not ≤₀-comparable.
    let w = le2_fn(&flip, &step)?.expect("flip reduces to step");
    println!("\nflip ≤₂ step via\n  {:?}\n  {:?}", w.g, w.f);
    w.verify_fn(&flip, &step)?;
    Ok(())
}
