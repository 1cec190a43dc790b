//! The ≤₂ degree poset of every map from a space with at most two points
//! into the discrete two-point space, printed as Graphviz DOT.
//!
//!     cargo run --example degrees | dot -Tsvg > degrees.svg

use std::sync::Arc;

use contred::explore::enumerate::{small_spaces, total_maps};
use contred::explore::degree_poset;
use contred::reduce::{Item, Reducer, Reducibility};
use contred::topo::Space;
use contred::Result;

fn main() -> Result<()> {
    let d2 = Arc::new(Space::discrete(2));
    let mut items = Vec::new();
    for x in small_spaces(2) {
        for (k, f) in total_maps(&x, &d2, usize::MAX)?.into_iter().enumerate() {
            items.push(Item::Map(f.renamed(&format!("{}_{k}", x.name()))?));
        }
    }
    let degrees = degree_poset(items, Reducibility::Le2, &Reducer::default())?;
    eprintln!("{} maps in {} degrees", degrees.items.len(), degrees.classes.len());
    print!("{}", degrees.to_dot());
    Ok(())
}
