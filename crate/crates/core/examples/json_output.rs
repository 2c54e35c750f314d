//! Builds the versioned output record that `hbv invariant --json` prints.

use handlebody_braids::cli::{cmd_invariant, cmd_trace, OutputRecord, WordArgs};
use handlebody_braids::eyb::EybOperator;

fn main() -> handlebody_braids::Result<()> {
    let op = EybOperator::jones();
    let args = WordArgs { genus: 1, strands: 2, word: "t1 s1 s1".into(), i: 0, order: 4, json: true };
    let rec = cmd_invariant(&args, 2, &op)?;
    let text = rec.to_json();
    println!("{text}");

    let back: OutputRecord = serde_json::from_str(&text).expect("record parses");
    assert_eq!(back, rec);

    println!("{}", cmd_trace(&WordArgs { i: 1, ..args }, &op)?.to_table());
    Ok(())
}
