//! L_{i,d} as ε-coefficients, and their vanishing on words with many double points.

use handlebody_braids::braid::Ambient;
use handlebody_braids::cli::{parse_braid_word, parse_word};
use handlebody_braids::eyb::EybOperator;
use handlebody_braids::invariants::{degree_vanishing_check, extended_invariant, link_invariant};
use handlebody_braids::series::format_rational;

fn main() -> handlebody_braids::Result<()> {
    let op = EybOperator::jones();
    let order = 4;
    let trefoil = parse_braid_word("s1 s1 s1", Ambient::classical(2)?)?;
    let knotted = parse_braid_word("t1 s1 t1 s1", Ambient::new(1, 2)?)?;
    for w in [&trefoil, &knotted] {
        println!("{w} in {}", w.ambient());
        for i in 0..=w.genus() {
            let vals: Vec<String> =
                (0..=order).map(|d| link_invariant(w, i, d, &op, order).map(|r| format_rational(&r.value))).collect::<Result<_, _>>()?;
            println!("  i = {i}: L_d for d = 0..{order}: [{}]", vals.join(", "));
        }
    }

    let s = parse_word("a1 s2 a1 a2", Ambient::new(1, 3)?, true)?;
    println!("\n{s}");
    for d in 0..=4 {
        let r = extended_invariant(&s, 0, d, &op, 6)?;
        println!("  extended L_0,{d} = {}", format_rational(&r.value));
    }
    println!("{}", degree_vanishing_check(&s, 1, 2, &op, 6)?);
    Ok(())
}
