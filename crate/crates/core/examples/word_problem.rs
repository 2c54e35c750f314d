//! Equality of handlebody braids through the Artin action on the free group.

use handlebody_braids::braid::Ambient;
use handlebody_braids::cli::parse_braid_word;

fn main() -> handlebody_braids::Result<()> {
    let amb = Ambient::new(2, 2)?;
    let pairs = [
        ("t1 s1 t1 s1", "s1 t1 s1 t1"),
        ("t1 s1^-1 t2 s1", "s1^-1 t2 s1 t1"),
        ("t1 t2", "t2 t1"),
        ("s1 t1 s1^-1", "s1^-1 t1 s1"),
    ];
    for (a, b) in pairs {
        let (u, v) = (parse_braid_word(a, amb)?, parse_braid_word(b, amb)?);
        println!("{a:>18}  =  {b:<18} {}", u.equals(&v)?);
    }

    let w = parse_braid_word("t2 s1", amb)?;
    println!("\n{w} in {} embeds as {}", w.ambient(), w.embed());
    println!("writhe {}, closure has {} components", w.writhe(), w.closure_components());
    println!("Artin image: {}", w.artin_signature()?);
    Ok(())
}
