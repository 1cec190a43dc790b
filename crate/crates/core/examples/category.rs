//! Coproducts and pullbacks in the category of spaces over a fixed target,
//! and the thin category of a degree poset.

use std::sync::Arc;

use contred::category::{coproduct_with_mediator, le0_cat, poset_to_category, pullback_with_mediator};
use contred::explore::degree_poset;
use contred::lattice::TaggedFamily;
use contred::reduce::{Item, Reducer, Reducibility, DEFAULT_BUDGET};
use contred::topo::{Space, TotalMap};
use contred::Result;

fn main() -> Result<()> {
    let d2 = Arc::new(Space::discrete(2));
    let flip = TotalMap::new("flip", Arc::new(Space::sierpinski()), d2.clone(), vec![1, 0])?;
    let alternating = TotalMap::new("alternating", Arc::new(Space::chain(3)), d2.clone(), vec![0, 1, 0])?;
    let family = TaggedFamily::indexed([flip.clone(), alternating.clone()]);

    let c = coproduct_with_mediator(&d2, &family)?;
    println!("coproduct {} with mediator {:?} ({} solution)", c.coproduct.space, c.mediator, c.solutions);

    let p = pullback_with_mediator(&d2, &family)?;
    println!("pullback object {} over {:?}", p.object, p.apex);
    let m = p.mediate(&p.projections)?;
    println!("the pullback factors through itself by {:?} ({} solution)", m.lambda, m.solutions);

    // An arrow u -> v over the target exists exactly when u ≤₀ v.
    let arrow = le0_cat(&flip, &alternating, &|g| g.is_continuous(), DEFAULT_BUDGET)?;
    println!("arrow flip -> alternating: {:?}", arrow);

    let step = TotalMap::new("step", Arc::new(Space::sierpinski()), d2, vec![0, 1])?;
    let items = [flip, step, alternating].map(Item::Map).to_vec();
    let degrees = degree_poset(items, Reducibility::Le0, &Reducer::default())?;
    let thin = poset_to_category(&degrees.poset);
    for a in 0..degrees.poset.len() {
        for b in a + 1..degrees.poset.len() {
            let join = thin.coproduct(a, b).map(|j| degrees.poset.label(j).to_string());
            println!("[{}] + [{}] = {:?}", degrees.poset.label(a), degrees.poset.label(b), join);
        }
    }
    Ok(())
}
