mod common;

use handlebody_braids::braid::BraidWord;
use handlebody_braids::eyb::EybOperator;
use handlebody_braids::laurent::LaurentPoly;
use handlebody_braids::trace::{trace_ts, turaev_trace, TraceValue};
use proptest::prelude::*;

/// `A² = −q` turns the normalized bracket into the trace of the built-in
/// operator. The other sign gives the mirror image.
const SIGN: i32 = 1;

fn oracle(strands: usize, gens: &[i32], op: &EybOperator) -> TraceValue {
    let f = common::normalized_bracket(strands, gens);
    let q = common::a_squared_to_q(&f, SIGN).expect("even powers of A");
    let c = common::closure_components(strands, gens) as u32;
    TraceValue::new(LaurentPoly::from_terms(q), op.quantum_dimension().unwrap(), c - 1)
}

fn pipeline(strands: usize, gens: &[i32], op: &EybOperator) -> TraceValue {
    trace_ts(&BraidWord::classical(strands as u32, gens).unwrap(), op).unwrap()
}

#[test]
fn oracle_unknot_and_unlink() {
    let one: common::APoly = [(0, 1)].into_iter().collect();
    assert_eq!(common::normalized_bracket(1, &[]), one);
    assert_eq!(common::normalized_bracket(2, &[1]), one);
    assert_eq!(common::normalized_bracket(2, &[]), [(2, -1), (-2, -1)].into_iter().collect());
}

#[test]
fn trefoil_hopf_mirror() {
    let op = EybOperator::jones();
    for gens in [&[1, 1, 1][..], &[1, 1], &[-1, -1, -1]] {
        assert_eq!(pipeline(2, gens, &op), oracle(2, gens, &op), "{gens:?}");
    }
}

#[test]
fn raw_trace_is_quantum_dimension_times_bracket() {
    let op = EybOperator::jones();
    let gens = [1, 1, 1];
    let f = common::a_squared_to_q(&common::normalized_bracket(2, &gens), SIGN).unwrap();
    let raw = turaev_trace(&BraidWord::classical(2, &gens).unwrap(), &op).unwrap();
    assert_eq!(raw, &LaurentPoly::from_terms(f) * &op.quantum_dimension().unwrap());
}

#[test]
fn opposite_sign_gives_mirror() {
    let op = EybOperator::jones();
    let f = common::normalized_bracket(2, &[1, 1, 1]);
    let q = LaurentPoly::from_terms(common::a_squared_to_q(&f, -SIGN).unwrap());
    assert_eq!(pipeline(2, &[-1, -1, -1], &op), TraceValue::new(q, op.quantum_dimension().unwrap(), 0));
}

#[test]
fn mirror_operator_file() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/jones_mirror.toml")).unwrap();
    let mirror = EybOperator::from_toml(&text).unwrap();
    let op = EybOperator::jones();
    let a = pipeline(3, &[1, -2, 1, -2], &mirror);
    let b = pipeline(3, &[-1, 2, -1, 2], &op);
    assert_eq!(a.numerator(), b.numerator());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn random_braids_match_oracle(
        strands in 2usize..=4,
        raw in proptest::collection::vec((1i32..=3, any::<bool>()), 0..=9),
    ) {
        let op = EybOperator::jones();
        let gens: Vec<i32> = raw
            .into_iter()
            .map(|(i, pos)| { let i = 1 + (i - 1) % (strands as i32 - 1); if pos { i } else { -i } })
            .collect();
        prop_assert_eq!(pipeline(strands, &gens, &op), oracle(strands, &gens, &op));
    }
}
