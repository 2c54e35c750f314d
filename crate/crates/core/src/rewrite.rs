//! Bounded bidirectional search for explicit derivations between classical
//! singular braid words using the defining relations of `SB_m`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::braid::Ambient;
use crate::error::{Error, Result};
use crate::singular::{SingularLetter as L, SingularWord};

pub const DEFAULT_DEPTH: usize = 8;

/// One defining relation instance `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub name: String,
    pub lhs: Vec<L>,
    pub rhs: Vec<L>,
}

impl Rule {
    fn new(name: impl Into<String>, lhs: Vec<L>, rhs: Vec<L>) -> Self {
        Rule { name: name.into(), lhs, rhs }
    }
}

/// Every instance of the defining relations of `SB_m`, in the order they
/// are usually listed.
pub fn defining_relations(m: u32) -> Vec<Rule> {
    let mut out = Vec::new();
    let idx: Vec<u32> = (1..m).collect();
    for &i in &idx {
        for &j in &idx {
            if i < j && j - i > 1 {
                out.push(Rule::new(format!("far commutation s{i} s{j}"), vec![L::sigma(i), L::sigma(j)], vec![L::sigma(j), L::sigma(i)]));
                out.push(Rule::new(format!("far commutation a{i} a{j}"), vec![L::a(i), L::a(j)], vec![L::a(j), L::a(i)]));
            }
        }
    }
    for &i in &idx {
        for &j in &idx {
            if i.abs_diff(j) != 1 {
                out.push(Rule::new(format!("commutation a{i} s{j}"), vec![L::a(i), L::sigma(j)], vec![L::sigma(j), L::a(i)]));
            }
        }
    }
    for &i in &idx {
        if i + 1 < m {
            let j = i + 1;
            out.push(Rule::new(
                format!("braid relation s{i} s{j}"),
                vec![L::sigma(i), L::sigma(j), L::sigma(i)],
                vec![L::sigma(j), L::sigma(i), L::sigma(j)],
            ));
        }
    }
    for &i in &idx {
        if i + 1 < m {
            let j = i + 1;
            out.push(Rule::new(
                format!("mixed relation s{i} s{j} a{i}"),
                vec![L::sigma(i), L::sigma(j), L::a(i)],
                vec![L::a(j), L::sigma(i), L::sigma(j)],
            ));
        }
    }
    for &i in &idx {
        if i + 1 < m {
            let j = i + 1;
            out.push(Rule::new(
                format!("mixed relation s{j} s{i} a{j}"),
                vec![L::sigma(j), L::sigma(i), L::a(j)],
                vec![L::a(i), L::sigma(j), L::sigma(i)],
            ));
        }
    }
    for &i in &idx {
        out.push(Rule::new(format!("inverse pair s{i} s{i}^-1"), vec![L::sigma(i), L::sigma_inv(i)], vec![]));
        out.push(Rule::new(format!("inverse pair s{i}^-1 s{i}"), vec![L::sigma_inv(i), L::sigma(i)], vec![]));
    }
    out
}

/// Commutations involving `σ^{-1}` that follow from the positive ones by
/// conjugation. The search uses them because it does not insert letters by
/// default.
fn derived_commutations(m: u32) -> Vec<Rule> {
    let mut out = Vec::new();
    for i in 1..m {
        for j in 1..m {
            if i.abs_diff(j) > 1 && i < j {
                for (ei, ej) in [(-1, 1), (1, -1), (-1, -1)] {
                    let a = L { exp: ei, ..L::sigma(i) };
                    let b = L { exp: ej, ..L::sigma(j) };
                    out.push(Rule::new(format!("far commutation {a} {b}"), vec![a, b], vec![b, a]));
                }
            }
            if i.abs_diff(j) != 1 {
                let s = L::sigma_inv(j);
                out.push(Rule::new(format!("commutation a{i} {s}"), vec![L::a(i), s], vec![s, L::a(i)]));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RewriteOptions {
    pub depth: usize,
    /// Also allow `1 → σσ^{-1}`; widens the search considerably.
    pub insertions: bool,
    /// Cap on visited words per side.
    pub max_states: usize,
}

impl Default for RewriteOptions {
    fn default() -> Self {
        RewriteOptions { depth: DEFAULT_DEPTH, insertions: false, max_states: 2_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub rule: String,
    pub position: usize,
    pub reversed: bool,
    pub result: Vec<L>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub ambient: Ambient,
    pub start: Vec<L>,
    pub steps: Vec<Step>,
}

impl Derivation {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end(&self) -> &[L] {
        self.steps.last().map_or(&self.start, |s| &s.result)
    }

    /// Replays every step against the rule list.
    pub fn verify(&self) -> bool {
        let rules = all_rules(self.ambient.strands);
        let mut cur = self.start.clone();
        for st in &self.steps {
            let ok = rules.iter().filter(|r| r.name == st.rule).any(|r| {
                let (from, to) = if st.reversed { (&r.rhs, &r.lhs) } else { (&r.lhs, &r.rhs) };
                cur.get(st.position..st.position + from.len()) == Some(from.as_slice())
                    && splice(&cur, st.position, from.len(), to) == st.result
            });
            if !ok {
                return false;
            }
            cur = st.result.clone();
        }
        true
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "  {}", show(&self.start))?;
        for s in &self.steps {
            let dir = if s.reversed { " (reversed)" } else { "" };
            writeln!(f, "= {}    [{}{dir} at {}]", show(&s.result), s.rule, s.position)?;
        }
        Ok(())
    }
}

fn show(w: &[L]) -> String {
    if w.is_empty() {
        return "e".into();
    }
    w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

fn all_rules(m: u32) -> Vec<Rule> {
    let mut r = defining_relations(m);
    r.extend(derived_commutations(m));
    r
}

fn splice(w: &[L], pos: usize, len: usize, with: &[L]) -> Vec<L> {
    let mut out = Vec::with_capacity(w.len() - len + with.len());
    out.extend_from_slice(&w[..pos]);
    out.extend_from_slice(with);
    out.extend_from_slice(&w[pos + len..]);
    out
}

type Parent = Option<(Vec<L>, usize, usize, bool)>;

fn neighbours(w: &[L], rules: &[Rule], insertions: bool) -> Vec<(Vec<L>, usize, usize, bool)> {
    let mut out = Vec::new();
    for (k, r) in rules.iter().enumerate() {
        for (from, to, rev) in [(&r.lhs, &r.rhs, false), (&r.rhs, &r.lhs, true)] {
            if from.is_empty() {
                if insertions {
                    for pos in 0..=w.len() {
                        out.push((splice(w, pos, 0, to), k, pos, rev));
                    }
                }
                continue;
            }
            if from.len() > w.len() {
                continue;
            }
            for pos in 0..=w.len() - from.len() {
                if w[pos..pos + from.len()] == from[..] {
                    out.push((splice(w, pos, from.len(), to), k, pos, rev));
                }
            }
        }
    }
    out
}

/// Searches for a chain of relation applications from `u` to `v` of at most
/// `opts.depth` steps. `Ok(None)` says nothing about equality.
pub fn rewrite_derivation(u: &SingularWord, v: &SingularWord, opts: RewriteOptions) -> Result<Option<Derivation>> {
    if u.ambient() != v.ambient() {
        return Err(Error::AmbientMismatch(u.ambient().to_string(), v.ambient().to_string()));
    }
    u.require_monoid()?;
    v.require_monoid()?;
    let (u, v) = (u.embed(), v.embed());
    let ambient = u.ambient();
    let rules = all_rules(ambient.strands);
    let start = u.letters().to_vec();
    let goal = v.letters().to_vec();

    let mut seen: [HashMap<Vec<L>, (Parent, usize)>; 2] = [HashMap::new(), HashMap::new()];
    seen[0].insert(start.clone(), (None, 0));
    seen[1].insert(goal.clone(), (None, 0));
    let mut queues: [VecDeque<Vec<L>>; 2] = [VecDeque::from([start.clone()]), VecDeque::from([goal.clone()])];
    let mut levels = [0usize, 0usize];
    let mut meet = if start == goal { Some(start.clone()) } else { None };

    while meet.is_none() && levels[0] + levels[1] < opts.depth {
        // grow the smaller frontier
        let side = if queues[0].len() <= queues[1].len() { 0 } else { 1 };
        if queues[side].is_empty() {
            break;
        }
        levels[side] += 1;
        let frontier: Vec<Vec<L>> = queues[side].drain(..).collect();
        'outer: for w in frontier {
            for (next, rule, pos, rev) in neighbours(&w, &rules, opts.insertions) {
                if seen[side].contains_key(&next) {
                    continue;
                }
                seen[side].insert(next.clone(), (Some((w.clone(), rule, pos, rev)), levels[side]));
                if seen[1 - side].contains_key(&next) {
                    meet = Some(next);
                    break 'outer;
                }
                queues[side].push_back(next);
            }
            if seen[side].len() > opts.max_states {
                return Err(Error::Resource(format!("rewrite search exceeded {} states", opts.max_states)));
            }
        }
    }
    let Some(mid) = meet else { return Ok(None) };

    // forward half: start → mid
    let mut fwd = Vec::new();
    let mut cur = mid.clone();
    while let Some((Some((prev, rule, pos, rev)), _)) = seen[0].get(&cur) {
        fwd.push(Step { rule: rules[*rule].name.clone(), position: *pos, reversed: *rev, result: cur.clone() });
        cur = prev.clone();
    }
    fwd.reverse();
    // backward half: mid → goal, each step undone
    let mut cur = mid;
    while let Some((Some((prev, rule, pos, rev)), _)) = seen[1].get(&cur) {
        fwd.push(Step { rule: rules[*rule].name.clone(), position: *pos, reversed: !*rev, result: prev.clone() });
        cur = prev.clone();
    }
    Ok(Some(Derivation { ambient, start, steps: fwd }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(m: u32, l: Vec<L>) -> SingularWord {
        SingularWord::new(Ambient::classical(m).unwrap(), l).unwrap()
    }

    #[test]
    fn inverse_pair() {
        let d = rewrite_derivation(&w(2, vec![L::sigma(1), L::sigma_inv(1)]), &w(2, vec![]), RewriteOptions { depth: 1, ..Default::default() })
            .unwrap()
            .unwrap();
        assert_eq!(d.len(), 1);
        assert!(d.verify());
        assert!(d.end().is_empty());
    }

    #[test]
    fn mixed_relation_one_step() {
        for i in 1..=3 {
            let u = w(5, vec![L::sigma(i), L::sigma(i + 1), L::a(i)]);
            let v = w(5, vec![L::a(i + 1), L::sigma(i), L::sigma(i + 1)]);
            let d = rewrite_derivation(&u, &v, RewriteOptions::default()).unwrap().unwrap();
            assert_eq!(d.len(), 1);
            assert!(d.verify());
        }
    }

    #[test]
    fn cubic_identity() {
        // σ̄_1σ̄_2²σ̄_1ā_2 = ā_2σ̄_1σ̄_2²σ̄_1
        let u = w(3, vec![L::sigma(1), L::sigma(2), L::sigma(2), L::sigma(1), L::a(2)]);
        let v = w(3, vec![L::a(2), L::sigma(1), L::sigma(2), L::sigma(2), L::sigma(1)]);
        let d = rewrite_derivation(&u, &v, RewriteOptions::default()).unwrap().unwrap();
        assert!(d.verify());
        assert_eq!(d.end(), v.letters());
        assert!(d.len() <= 3, "{d}");
    }

    #[test]
    fn distinct_words_have_no_short_chain() {
        let d = rewrite_derivation(&w(3, vec![L::a(1)]), &w(3, vec![L::a(2)]), RewriteOptions { depth: 4, ..Default::default() }).unwrap();
        assert!(d.is_none());
    }

    #[test]
    fn relation_count() {
        // m = 3: commutations a1s1, a2s2, braid 1, two mixed, four inverse pairs
        assert_eq!(defining_relations(3).len(), 2 + 1 + 2 + 4);
    }
}
