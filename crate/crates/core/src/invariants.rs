//! Finite-type invariants from the traces: substitute `q = e^ε`, split into
//! homogeneous parts, and read off `L_{i,d}`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{Ambient, BraidLetter, BraidWord, Generator};
use crate::error::{Error, Result};
use crate::eyb::EybOperator;
use crate::laurent::LaurentPoly;
use crate::random;
use crate::report::CheckReport;
use crate::series::{format_rational, integer, Rational, TruncatedSeries};
use crate::singular::{SingularGenerator, SingularWord};
use crate::trace::{trace_on_algebra, trace_tsi, TraceValue};
use crate::vassiliev::{expand, AlgebraElement};

/// `q^k ↦ exp(kε)`, truncated after `ε^order`.
pub fn exp_substitute(p: &LaurentPoly, order: i32) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for (e, c) in p.terms() {
        // c · e^k / k!
        let mut term = integer(c);
        for k in 0..=order.max(0) {
            if k > 0 {
                term = term * integer(e as i64) / integer(k as i64);
            }
            if term.is_zero() {
                break;
            }
            s.add_term(k, term.clone());
        }
    }
    s
}

/// The series of `numerator / δ^power` after substitution.
pub fn trace_value_series(v: &TraceValue, order: i32) -> Result<TruncatedSeries> {
    let num = exp_substitute(v.numerator(), order);
    if v.power() == 0 {
        return Ok(num);
    }
    let inv = exp_substitute(v.qdim(), order).inverse().map_err(|_| {
        Error::Operator(format!("quantum dimension {} vanishes at q = 1", v.qdim()))
    })?;
    Ok(num.mul(&inv.pow(v.power())))
}

/// `T_i` on an algebra element, as a series truncated after `ε^order`.
pub fn trace_ti(x: &AlgebraElement, i: u32, op: &EybOperator, order: i32) -> Result<TruncatedSeries> {
    let comb = trace_on_algebra(x, op, i)?;
    let mut cache: BTreeMap<(TraceValue, i32), TruncatedSeries> = BTreeMap::new();
    let mut out = TruncatedSeries::zero(order);
    for (value, coeff) in comb.terms() {
        for (e, c) in coeff.terms() {
            let need = (order - e).max(0);
            let key = (value.clone(), need);
            if !cache.contains_key(&key) {
                cache.insert(key.clone(), trace_value_series(value, need)?);
            }
            for (k, t) in cache[&key].terms() {
                out.add_term(k + e, t * c);
            }
        }
    }
    Ok(out)
}

/// `T_i(v^g(w))`.
pub fn trace_ti_word(w: &BraidWord, i: u32, op: &EybOperator, order: i32) -> Result<TruncatedSeries> {
    trace_value_series(&trace_tsi(w, i, op)?, order)
}

/// `T_i(expand(s))` for a monoid word.
pub fn trace_ti_singular(s: &SingularWord, i: u32, op: &EybOperator, order: i32) -> Result<TruncatedSeries> {
    match s.as_braid() {
        Some(w) => trace_ti_word(&w, i, op, order),
        None => trace_ti(&expand(s, order)?, i, op, order),
    }
}

/// The `ε^d` coefficient.
pub fn homogeneous_part(t: &TruncatedSeries, d: i32) -> Result<Rational> {
    t.homogeneous_part(d)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantResult {
    pub word: String,
    pub genus: u32,
    pub strands: u32,
    pub i: u32,
    pub d: i32,
    pub order: i32,
    pub singular_points: usize,
    #[serde(serialize_with = "ser_rational")]
    pub value: Rational,
    #[serde(skip)]
    pub series: TruncatedSeries,
    pub writhe: i64,
    pub components: u32,
    pub convention_id: String,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

fn check_levels(genus: u32, i: u32, d: i32, order: i32) -> Result<()> {
    if i > genus {
        return Err(Error::InvalidArgument(format!("collapse level {i} exceeds genus {genus}")));
    }
    if d < 0 || d > order {
        return Err(Error::InvalidArgument(format!("degree {d} must lie in 0..={order}")));
    }
    Ok(())
}

/// `L_{i,d}` of the closure of `w`: the `ε^d` coefficient of `T_i(v^g(w))`
/// (the Markov factor is 1, so no `z` scaling).
pub fn link_invariant(w: &BraidWord, i: u32, d: i32, op: &EybOperator, order: i32) -> Result<InvariantResult> {
    check_levels(w.genus(), i, d, order)?;
    // v^g(w) is the single word w, so no signature is needed
    let series = trace_ti_word(w, i, op, order)?;
    let z = op.markov_factor();
    debug_assert!(z.is_one());
    Ok(InvariantResult {
        word: w.to_string(),
        genus: w.genus(),
        strands: w.strands(),
        i,
        d,
        order,
        singular_points: 0,
        value: series.coeff(d),
        series,
        writhe: w.writhe(),
        components: w.closure_components(),
        convention_id: op.convention_id(),
    })
}

/// The standard extension of `L_{i,d}` to a singular word with `l` double
/// points: the `ε^{d−l}` coefficient of `T_i(expand(s))`.
pub fn extended_invariant(s: &SingularWord, i: u32, d: i32, op: &EybOperator, order: i32) -> Result<InvariantResult> {
    let amb = s.ambient();
    check_levels(amb.genus, i, d, order)?;
    let l = s.singular_count();
    let series = trace_ti_singular(s, i, op, order)?;
    let h = s.desingularize_h()?;
    Ok(InvariantResult {
        word: s.to_string(),
        genus: amb.genus,
        strands: amb.strands,
        i,
        d,
        order,
        singular_points: l,
        value: series.coeff(d - l as i32),
        series,
        writhe: h.writhe(),
        components: h.closure_components(),
        convention_id: op.convention_id(),
    })
}

/// All `2^l` resolutions `a ↦ σ^{±1}` with their signs.
pub fn resolutions(s: &SingularWord) -> Result<Vec<(BraidWord, i64)>> {
    s.require_monoid()?;
    let mut out: Vec<(Vec<BraidLetter>, i64)> = vec![(Vec::new(), 1)];
    for l in s.letters() {
        let choices = match l.generator {
            SingularGenerator::A(i) => vec![(BraidLetter::sigma(i), 1), (BraidLetter::sigma_inv(i), -1)],
            SingularGenerator::Sigma(i) => vec![(BraidLetter { generator: Generator::Sigma(i), exp: l.exp as i8 }, 1)],
            SingularGenerator::Tau(k) => vec![(BraidLetter { generator: Generator::Tau(k), exp: l.exp as i8 }, 1)],
        };
        out = out
            .into_iter()
            .flat_map(|(w, sign)| {
                choices.iter().map(move |&(bl, c)| {
                    let mut w = w.clone();
                    w.push(bl);
                    (w, sign * c)
                })
            })
            .collect();
    }
    out.into_iter().map(|(w, sign)| Ok((BraidWord::new(s.ambient(), w)?, sign))).collect()
}

/// Checks that the extended `L_{i,d}` vanishes when `l > d`, that the
/// expansion route agrees with the alternating sum over resolutions, and
/// that `T_i(expand(s))` has no pole.
pub fn degree_vanishing_check(s: &SingularWord, i: u32, d: i32, op: &EybOperator, order: i32) -> Result<CheckReport> {
    let l = s.singular_count();
    let mut rep = CheckReport::new(format!("degree vanishing {s} (l={l}, d={d}, i={i})"));
    let ext = extended_invariant(s, i, d, op, order)?;
    let detail = format!("l={l} d={d} value={}", format_rational(&ext.value));
    if l as i32 > d {
        rep.push("extended invariant vanishes", ext.value.is_zero(), detail.clone());
    } else {
        rep.note(format!("l ≤ d, value not forced: {detail}"));
    }
    let mut alt = Rational::zero();
    for (w, sign) in resolutions(s)? {
        alt += trace_ti_word(&w, i, op, d)?.coeff(d) * integer(sign);
    }
    rep.push("agrees with alternating sum of resolutions", alt == ext.value, detail);
    let val = ext.series.valuation().unwrap_or(0);
    rep.push("no ε pole", val >= 0, format!("valuation {val}"));
    Ok(rep)
}

/// Bound on `g + n` reached by stabilization in the harness.
pub const HARNESS_MAX_TOTAL_STRANDS: u32 = 7;
const HARNESS_MAX_LEN: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MarkovMove {
    Conjugate,
    Rotate,
    Stabilize(i8),
    Destabilize,
}

fn destabilize(w: &BraidWord) -> Option<BraidWord> {
    let n = w.strands();
    if n < 2 {
        return None;
    }
    let top = Generator::Sigma(n - 1);
    let hits: Vec<usize> = w.letters().iter().enumerate().filter(|(_, l)| l.generator == top).map(|(k, _)| k).collect();
    if hits.len() != 1 {
        return None;
    }
    let k = hits[0];
    let mut letters = w.letters()[k + 1..].to_vec();
    letters.extend_from_slice(&w.letters()[..k]);
    BraidWord::new(Ambient::new(w.genus(), n - 1).ok()?, letters).ok()
}

/// Applies one move chosen uniformly among the applicable ones.
pub fn random_markov_move<R: Rng>(rng: &mut R, w: &BraidWord) -> Result<(MarkovMove, BraidWord)> {
    let mut options = vec![MarkovMove::Rotate];
    if w.len() < HARNESS_MAX_LEN {
        options.push(MarkovMove::Conjugate);
    }
    if w.genus() + w.strands() < HARNESS_MAX_TOTAL_STRANDS {
        options.push(MarkovMove::Stabilize(1));
        options.push(MarkovMove::Stabilize(-1));
    }
    let down = destabilize(w);
    if down.is_some() {
        options.push(MarkovMove::Destabilize);
    }
    let mv = options[rng.gen_range(0..options.len())];
    let next = match mv {
        MarkovMove::Rotate => {
            let mut letters = w.letters().to_vec();
            if !letters.is_empty() {
                letters.rotate_left(1);
            }
            BraidWord::new(w.ambient(), letters)?
        }
        MarkovMove::Conjugate => {
            let c = loop {
                let c = random::random_word(rng, w.ambient(), 3);
                if !c.is_empty() || w.ambient().strands + w.ambient().genus <= 1 {
                    break c;
                }
            };
            c.concat(w)?.concat(&c.inverse())?.free_reduce()
        }
        MarkovMove::Stabilize(e) => {
            let n = w.strands();
            let up = w.with_strands(n + 1)?;
            let s = BraidLetter { generator: Generator::Sigma(n), exp: e };
            up.concat(&BraidWord::new(up.ambient(), vec![s])?)?
        }
        MarkovMove::Destabilize => down.expect("checked applicable"),
    };
    Ok((mv, next))
}

/// Runs a random Markov orbit from `w`, recomputing the trace and
/// `L_{i,d}` for every `i ≤ g` and `d ≤ order` after each move.
pub fn markov_moves_harness(
    w: &BraidWord,
    moves: usize,
    seed: u64,
    op: &EybOperator,
    order: i32,
) -> Result<CheckReport> {
    let mut rep = CheckReport::new(format!("Markov orbit of {w} in {}", w.ambient()));
    rep.note(format!("seed {seed}, {moves} moves, order {order}"));
    let mut rng = random::rng(seed);
    let levels: Vec<u32> = (0..=w.genus()).collect();
    let base: Vec<TruncatedSeries> =
        levels.iter().map(|&i| link_invariant(w, i, 0, op, order).map(|r| r.series)).collect::<Result<_>>()?;
    let mut words = Vec::with_capacity(moves);
    let mut cur = w.clone();
    for _ in 0..moves {
        let (mv, next) = random_markov_move(&mut rng, &cur)?;
        words.push((mv, next.clone()));
        cur = next;
    }
    let checks: Vec<Result<bool>> = words
        .par_iter()
        .map(|(_, x)| {
            for (&i, b) in levels.iter().zip(&base) {
                if link_invariant(x, i, 0, op, order)?.series != *b {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .collect();
    for (k, ((mv, x), ok)) in words.iter().zip(checks).enumerate() {
        rep.push(format!("move {k} {mv:?} → {} [{x}]", x.ambient()), ok?, "");
    }
    Ok(rep)
}

/// `z · L(w ⊔ ○) = L(w)` with `z = 1`, through the inclusion
/// `Br_n^g ⊂ Br_{n+1}^g`.
pub fn unknot_union_check(w: &BraidWord, i: u32, d: i32, op: &EybOperator, order: i32) -> Result<CheckReport> {
    let mut rep = CheckReport::new(format!("unknot union {w} in {}", w.ambient()));
    let up = w.with_strands(w.strands() + 1)?;
    let a = link_invariant(w, i, d, op, order)?;
    let b = link_invariant(&up, i, d, op, order)?;
    let z = exp_substitute(&op.markov_factor(), order);
    let lhs = z.mul(&b.series);
    rep.push(
        format!("i={i} d={d}"),
        lhs.coeff(d) == a.value && lhs == a.series,
        format!("L(w) = {}, L(w ⊔ ○) = {}", format_rational(&a.value), format_rational(&b.value)),
    );
    Ok(rep)
}
