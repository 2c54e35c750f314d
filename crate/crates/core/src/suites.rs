//! The named verification suites run by `hbv check`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::braid::Ambient;
use crate::error::{Error, Result};
use crate::eyb::EybOperator;
use crate::invariants::{degree_vanishing_check, extended_invariant};
use crate::random;
use crate::relations::{handle_commutation_check, relation_suite_braid, relation_suite_singular};
use crate::report::CheckReport;
use crate::series::format_rational;
use crate::singular::{SingularLetter as S, SingularWord};
use crate::trace::markov_axioms_test;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Relations1,
    Relations2,
    Prop1,
    Markov,
    Eyb,
    Vanishing,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Relations1, Suite::Relations2, Suite::Prop1, Suite::Markov, Suite::Eyb, Suite::Vanishing];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations1 => "relations1",
            Suite::Relations2 => "relations2",
            Suite::Prop1 => "prop1",
            Suite::Markov => "markov",
            Suite::Eyb => "eyb",
            Suite::Vanishing => "vanishing",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

/// Parameters shared by the suites; `None` picks the suite's default.
#[derive(Debug, Clone, Default)]
pub struct SuiteParams {
    pub genus: Option<u32>,
    pub strands: Option<u32>,
    pub depth: Option<usize>,
    pub seed: Option<u64>,
    pub trials: Option<usize>,
    pub order: Option<i32>,
}

pub const DEFAULT_SEED: u64 = 20260101;

pub fn run_suite(suite: Suite, p: &SuiteParams, op: &EybOperator) -> Result<CheckReport> {
    let seed = p.seed.unwrap_or(DEFAULT_SEED);
    match suite {
        Suite::Relations1 => relations1(p.genus.unwrap_or(0) + p.strands.unwrap_or(6), op),
        Suite::Relations2 => relations2(p.genus.unwrap_or(3), p.strands.unwrap_or(4)),
        Suite::Prop1 => prop1(p.genus.unwrap_or(3), p.strands.unwrap_or(2), p.depth.unwrap_or(8)),
        Suite::Markov => markov(p.genus.unwrap_or(2), p.strands.unwrap_or(4), p.trials.unwrap_or(100), seed, op),
        Suite::Eyb => Ok(op.axioms_check()),
        Suite::Vanishing => vanishing(p.genus.unwrap_or(2), p.strands.unwrap_or(3), p.order.unwrap_or(6), seed, op),
    }
}

/// Defining relations of `SB_m` for every `2 ≤ m ≤ max_m`.
pub fn relations1(max_m: u32, op: &EybOperator) -> Result<CheckReport> {
    let mut rep = CheckReport::new(format!("relations of SB_m, m ≤ {max_m}"));
    for m in 2..=max_m {
        rep.extend(relation_suite_singular(m, op)?);
    }
    Ok(rep)
}

/// Defining relations of `Br_n^g` for every `g ≤ max_g`, `1 ≤ n ≤ max_n`.
pub fn relations2(max_g: u32, max_n: u32) -> Result<CheckReport> {
    let mut rep = CheckReport::new(format!("relations of Br_n^g, g ≤ {max_g}, n ≤ {max_n}"));
    for g in 0..=max_g {
        for n in 1..=max_n {
            rep.extend(relation_suite_braid(g, n)?);
        }
    }
    Ok(rep)
}

/// The handle relation for all `1 ≤ i ≤ g ≤ max_g`.
pub fn prop1(max_g: u32, n: u32, depth: usize) -> Result<CheckReport> {
    let mut rep = CheckReport::new(format!("handle relations, g ≤ {max_g}, n = {n}"));
    let cases: Vec<(u32, u32)> = (1..=max_g).flat_map(|g| (1..=g).map(move |i| (g, i))).collect();
    let results: Vec<Result<CheckReport>> = cases.par_iter().map(|&(g, i)| handle_commutation_check(g, n, i, depth)).collect();
    for r in results {
        rep.extend(r?);
    }
    Ok(rep)
}

/// Markov trace axioms on `trials` random words for every `g ≤ max_g`,
/// `1 ≤ n ≤ max_n`.
pub fn markov(max_g: u32, max_n: u32, trials: usize, seed: u64, op: &EybOperator) -> Result<CheckReport> {
    let mut rep = CheckReport::new(format!("Markov axioms, g ≤ {max_g}, n ≤ {max_n}, {trials} trials each"));
    for g in 0..=max_g {
        for n in 1..=max_n {
            let cell_seed = seed ^ ((g as u64) << 32 | n as u64);
            rep.extend(markov_axioms_test(op, Ambient::new(g, n)?, trials, 12, cell_seed)?);
        }
    }
    Ok(rep)
}

/// Random monoid words with `1 ≤ l ≤ 4` double points for every `g ≤ max_g`,
/// `2 ≤ n ≤ max_n`; `per_cell` words per `(g, n, l)`.
pub fn vanishing_corpus(max_g: u32, max_n: u32, per_cell: usize, seed: u64) -> Result<Vec<SingularWord>> {
    let mut rng = random::rng(seed);
    let mut out = Vec::new();
    for g in 0..=max_g {
        for n in 2..=max_n {
            for l in 1..=4 {
                for _ in 0..per_cell {
                    let extra = rand::Rng::gen_range(&mut rng, 0..=4);
                    if let Some(w) = random::random_singular_word(&mut rng, Ambient::new(g, n)?, l, extra) {
                        out.push(w);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Searches small words with two double points for a nonzero extended
/// `L_{0,2}`.
pub fn nonzero_witness(op: &EybOperator, order: i32) -> Result<Option<(SingularWord, String)>> {
    let amb = Ambient::classical(3)?;
    let mids: [&[S]; 5] = [&[], &[S::sigma(1)], &[S::sigma(2)], &[S::sigma(1), S::sigma(2)], &[S::sigma_inv(1)]];
    for a in [S::a(1), S::a(2)] {
        for b in [S::a(1), S::a(2)] {
            for mid in mids {
                let letters = [&[a][..], mid, &[b]].concat();
                let w = SingularWord::new(amb, letters)?;
                let v = extended_invariant(&w, 0, 2, op, order)?.value;
                if !num_traits::Zero::is_zero(&v) {
                    return Ok(Some((w, format_rational(&v))));
                }
            }
        }
    }
    Ok(None)
}

/// Degree vanishing, agreement with the resolution sum, and pole
/// cancellation on [`vanishing_corpus`] for all `d ≤ 3`, `i ≤ g`.
pub fn vanishing(max_g: u32, max_n: u32, order: i32, seed: u64, op: &EybOperator) -> Result<CheckReport> {
    let mut rep = CheckReport::new(format!("degree vanishing, g ≤ {max_g}, n ≤ {max_n}, order {order}"));
    rep.note(format!("seed {seed}"));
    let corpus = vanishing_corpus(max_g, max_n, 3, seed)?;
    let max_d = 3.min(order);
    let jobs: Vec<(&SingularWord, u32, i32)> = corpus
        .iter()
        .flat_map(|w| (0..=w.ambient().genus).flat_map(move |i| (0..=max_d).map(move |d| (w, i, d))))
        .collect();
    let results: Vec<Result<CheckReport>> =
        jobs.par_iter().map(|&(w, i, d)| degree_vanishing_check(w, i, d, op, order)).collect();
    for r in results {
        let r = r?;
        let name = r.name.clone();
        for it in r.items {
            rep.push(format!("{name}: {}", it.label), it.passed, it.detail);
        }
    }
    match nonzero_witness(op, order)? {
        Some((w, v)) => rep.push(format!("nonzero extended L_0,2 at l = d = 2: {w}"), true, format!("value {v}")),
        None => rep.push("nonzero extended L_0,2 at l = d = 2", false, "no witness among small words"),
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_runs() {
        let op = EybOperator::jones();
        assert!(relations1(3, &op).unwrap().passed());
        assert!(relations2(1, 2).unwrap().passed());
        assert!(prop1(1, 2, 8).unwrap().passed());
        assert!(markov(1, 2, 3, 1, &op).unwrap().passed());
        assert!(vanishing(0, 2, 4, 5, &op).unwrap().passed());
    }
}
