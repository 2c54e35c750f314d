//! Searches for an explicit chain of defining relations between two words.

use handlebody_braids::relations::{cubic_words, handle_commutation_words};
use handlebody_braids::rewrite::{rewrite_derivation, RewriteOptions};

fn main() -> handlebody_braids::Result<()> {
    let opts = RewriteOptions { depth: 8, ..Default::default() };
    for (l, r) in [handle_commutation_words(1, 2, 1)?, cubic_words(1)?] {
        println!("{l}  ~  {r}");
        match rewrite_derivation(&l, &r, opts)? {
            Some(d) => {
                println!("{d}");
                println!("verified: {}\n", d.verify());
            }
            None => println!("no derivation within {} steps\n", opts.depth),
        }
    }
    Ok(())
}
