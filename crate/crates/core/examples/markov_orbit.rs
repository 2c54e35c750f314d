//! Random Markov moves never change the invariants.

use handlebody_braids::braid::Ambient;
use handlebody_braids::cli::parse_braid_word;
use handlebody_braids::eyb::EybOperator;
use handlebody_braids::invariants::{markov_moves_harness, unknot_union_check};

fn main() -> handlebody_braids::Result<()> {
    let op = EybOperator::jones();
    let w = parse_braid_word("t1 s1 s1 t1^-1 s1", Ambient::new(1, 2)?)?;
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(11);
    let rep = markov_moves_harness(&w, 25, seed, &op, 3)?;
    println!("{rep}");

    for d in 0..=3 {
        let r = unknot_union_check(&w, 1, d, &op, 3)?;
        println!("{}: {}", r.name, r.items[0].detail);
    }
    Ok(())
}
