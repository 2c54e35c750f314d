//! Double points become differences of crossings: a ↦ ε⁻¹(σ − σ⁻¹).

use handlebody_braids::braid::Ambient;
use handlebody_braids::cli::parse_word;
use handlebody_braids::invariants::resolutions;
use handlebody_braids::vassiliev::{expand, singular_words_equal};

fn main() -> handlebody_braids::Result<()> {
    let amb = Ambient::new(1, 3)?;
    let s = parse_word("a1 t1 a2", amb, true)?;
    println!("{s}: {} double points, degree {}", s.singular_count(), s.degree());
    println!("expansion to order 2:\n  {}", expand(&s, 2)?);

    println!("resolutions with signs:");
    for (w, sign) in resolutions(&s)? {
        println!("  {sign:+} {w}");
    }

    // a1 commutes with s1 but not with s2
    let x = parse_word("a1 s1", amb, true)?;
    let y = parse_word("s1 a1", amb, true)?;
    let z = parse_word("s2 a1", amb, true)?;
    let t = parse_word("a1 s2", amb, true)?;
    println!("\n{x} = {y}: {}", singular_words_equal(&x, &y)?);
    println!("{t} = {z}: {}", singular_words_equal(&t, &z)?);
    Ok(())
}
