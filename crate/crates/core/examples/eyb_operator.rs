//! The built-in operator, its axioms, and a round trip through the file format.

use handlebody_braids::eyb::EybOperator;

fn main() -> handlebody_braids::Result<()> {
    let op = EybOperator::jones();
    println!("R =\n{}", op.r());
    println!("quantum dimension {}", op.quantum_dimension()?);
    println!("{}", op.axioms_check());

    let text = op.to_toml();
    let back = EybOperator::from_toml(&text)?;
    println!("round trip keeps the convention id: {}", back.convention_id() == op.convention_id());
    println!("{}", op.convention_id());

    let broken = include_str!("data/broken.toml");
    match EybOperator::from_toml(broken) {
        Ok(_) => println!("broken operator was accepted"),
        Err(e) => println!("broken operator rejected: {e}"),
    }
    Ok(())
}
