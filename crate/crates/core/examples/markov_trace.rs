//! Normalized traces of a few closures, and the collapse of handles.

use handlebody_braids::braid::Ambient;
use handlebody_braids::cli::parse_braid_word;
use handlebody_braids::eyb::EybOperator;
use handlebody_braids::trace::{markov_axioms_test, trace_ts, trace_tsi};

fn main() -> handlebody_braids::Result<()> {
    let op = EybOperator::jones();
    for (n, text, name) in [(1, "", "unknot"), (2, "s1 s1 s1", "trefoil"), (2, "s1 s1", "Hopf link"), (3, "s1 s2^-1 s1 s2^-1", "figure eight")] {
        let w = parse_braid_word(text, Ambient::classical(n)?)?;
        println!("{name:>12}: {}", trace_ts(&w, &op)?);
    }

    let w = parse_braid_word("t1 s1 t2^-1 s1", Ambient::new(2, 2)?)?;
    println!("\n{w} in {}", w.ambient());
    for i in 0..=2 {
        println!("  i = {i}: {}", trace_tsi(&w, i, &op)?);
    }

    let rep = markov_axioms_test(&op, Ambient::new(1, 3)?, 20, 10, 7)?;
    let (ok, total) = rep.count();
    println!("\n{}: {ok}/{total}", rep.name);
    Ok(())
}
