//! Reading and writing the `.clt` corpus format.

use contred::cli::Corpus;
use contred::invariants::report;
use contred::reduce::{Item, Reducer, Reducibility};
use contred::Result;

const TEXT: &str = "
# The Sierpinski space and two maps out of it.
space S2
  points s0 s1
  below s0 s1
end
space D2
  points 0 1
end
map flip : S2 -> D2
  s0 -> 1
  s1 -> 0
end
map half : S2 -> D2 partial
  s1 -> 0
end
relation R : S2 -> D2
  s0 -> 0 1
  s1 -> 1
end
";

fn main() -> Result<()> {
    let corpus = Corpus::parse(TEXT)?;
    let half = corpus.map("half").expect("declared");
    println!("half: Lev1 {}, bas {}", report(half).lev1, report(half).bas);

    let choices = Item::Problem(corpus.relation("R").expect("declared").choice_functions(16)?);
    let flip = corpus.item("flip")?;
    let c = Reducer::default().compare(&flip, &choices, Reducibility::Le2)?;
    println!("flip ≤₂ R: {}, R ≤₂ flip: {}", c.forward.is_some(), c.backward.is_some());

    // Serialization is canonical, so a second round trip is the identity.
    let text = corpus.serialize();
    assert_eq!(Corpus::parse(&text)?.serialize(), text);
    print!("{text}");
    Ok(())
}
