//! Verification suites for the defining relations of `SB_m` and `Br_n^g`,
//! the relations of `SB_n^g` coming from the handles, and the analogous
//! braid relations.

use rayon::prelude::*;

use crate::braid::{tau_expansion, Ambient, BraidLetter, BraidWord};
use crate::error::{Error, Result};
use crate::eyb::EybOperator;
use crate::report::CheckReport;
use crate::rewrite::{defining_relations, rewrite_derivation, RewriteOptions};
use crate::singular::{tau_interval, SingularLetter as S, SingularWord};
use crate::trace::rho_singular;
use crate::vassiliev::singular_words_equal;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularRelation {
    pub name: String,
    pub lhs: SingularWord,
    pub rhs: SingularWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidRelation {
    pub name: String,
    pub lhs: BraidWord,
    pub rhs: BraidWord,
}

/// Instances of the defining relations of `SB_m`.
pub fn singular_relation_instances(m: u32) -> Result<Vec<SingularRelation>> {
    let amb = Ambient::classical(m)?;
    defining_relations(m)
        .into_iter()
        .map(|r| {
            Ok(SingularRelation {
                name: format!("m={m} {}", r.name),
                lhs: SingularWord::new(amb, r.lhs)?,
                rhs: SingularWord::new(amb, r.rhs)?,
            })
        })
        .collect()
}

/// Every relation of `SB_m`, checked three ways: the expansion oracle, the
/// braid images under `h` and `h′`, and the tensor representation with
/// `ā_i ↦ R_i − R_i^{-1}`.
pub fn relation_suite_singular(m: u32, op: &EybOperator) -> Result<CheckReport> {
    let mut rep = CheckReport::new(format!("SB_{m} relations"));
    let inst = singular_relation_instances(m)?;
    let results: Vec<Result<(String, [bool; 4])>> = inst
        .par_iter()
        .map(|r| {
            let oracle = singular_words_equal(&r.lhs, &r.rhs)?;
            let h = r.lhs.desingularize_h()?.equals(&r.rhs.desingularize_h()?)?;
            let hp = r.lhs.desingularize_h_prime()?.equals(&r.rhs.desingularize_h_prime()?)?;
            let tensor = rho_singular(&r.lhs, op)? == rho_singular(&r.rhs, op)?;
            Ok((format!("{}: {} = {}", r.name, show(&r.lhs), show(&r.rhs)), [oracle, h, hp, tensor]))
        })
        .collect();
    for res in results {
        let (label, [o, h, hp, t]) = res?;
        rep.push(format!("{label} [expansion]"), o, "");
        rep.push(format!("{label} [h]"), h, "");
        rep.push(format!("{label} [h′]"), hp, "");
        rep.push(format!("{label} [tensor]"), t, "");
    }
    Ok(rep)
}

fn show(w: &SingularWord) -> String {
    if w.is_empty() { "e".into() } else { w.to_string() }
}

/// Instances of the defining relations of `Br_n^g`.
pub fn braid_relation_instances(g: u32, n: u32) -> Result<Vec<BraidRelation>> {
    let amb = Ambient::new(g, n)?;
    let mut out = Vec::new();
    let mut add = |name: String, l: Vec<BraidLetter>, r: Vec<BraidLetter>| -> Result<()> {
        out.push(BraidRelation { name, lhs: BraidWord::new(amb, l)?, rhs: BraidWord::new(amb, r)? });
        Ok(())
    };
    let s = BraidLetter::sigma;
    let t = BraidLetter::tau;
    for i in 1..n {
        for j in i + 2..n {
            add(format!("s{i} s{j} = s{j} s{i}"), vec![s(i), s(j)], vec![s(j), s(i)])?;
        }
        if i + 1 < n {
            let j = i + 1;
            add(format!("s{i} s{j} s{i} = s{j} s{i} s{j}"), vec![s(i), s(j), s(i)], vec![s(j), s(i), s(j)])?;
        }
    }
    for k in 1..=g {
        for i in 2..n {
            add(format!("t{k} s{i} = s{i} t{k}"), vec![t(k), s(i)], vec![s(i), t(k)])?;
        }
        if n >= 2 {
            add(format!("t{k} s1 t{k} s1 = s1 t{k} s1 t{k}"), vec![t(k), s(1), t(k), s(1)], vec![s(1), t(k), s(1), t(k)])?;
        }
    }
    if n >= 2 {
        let si = BraidLetter::sigma_inv(1);
        for k in 1..g {
            for l in 1..=g - k {
                let kl = k + l;
                add(
                    format!("t{k} s1^-1 t{kl} s1 = s1^-1 t{kl} s1 t{k}"),
                    vec![t(k), si, t(kl), s(1)],
                    vec![si, t(kl), s(1), t(k)],
                )?;
            }
        }
    }
    Ok(out)
}

/// `τ_i τ_{i+1} ⋯ τ_m` as classical letters, each `τ_k` written with the
/// genus-`genus` formula.
fn tau_interval_classical(i: u32, m: u32, genus: u32) -> Result<Vec<BraidLetter>> {
    let mut out = Vec::new();
    for l in tau_interval(i, m)? {
        let crate::singular::SingularGenerator::Tau(k) = l.generator else { unreachable!() };
        out.extend(tau_expansion(k, genus)?);
    }
    Ok(out)
}

/// Which `τ` formula the handle relation uses for `τ_{i,m}` with `m < g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TauConvention {
    /// `τ_k` written for a handlebody of genus `m`.
    OwnGenus,
    /// `τ_k` as in `Br_n^g`.
    AmbientGenus,
}

/// `τ_{i,m} σ̄_{m+1} τ_{i,m} σ̄_{m+1}` against the symmetric right side
/// `σ̄_{m+1} τ_{i,m} σ̄_{m+1} τ_{i,m}` and the unbalanced one
/// `σ̄_{m+1} τ_{i,m} σ̄_{m+1}`, in `Br_{g+n}`.
pub fn handle_relation(i: u32, m: u32, g: u32, n: u32, conv: TauConvention) -> Result<(bool, bool)> {
    if m > g || n < 2 {
        return Err(Error::InvalidArgument(format!("need i ≤ m ≤ g and n ≥ 2, got i={i} m={m} g={g} n={n}")));
    }
    let amb = Ambient::classical(g + n)?;
    let tau = tau_interval_classical(i, m, if conv == TauConvention::OwnGenus { m } else { g })?;
    let s = BraidLetter::sigma(m + 1);
    let cat = |parts: &[&[BraidLetter]]| -> Result<BraidWord> { BraidWord::new(amb, parts.concat()) };
    let lhs = cat(&[&tau, &[s], &tau, &[s]])?;
    let sym = cat(&[&[s], &tau, &[s], &tau])?;
    let printed = cat(&[&[s], &tau, &[s]])?;
    Ok((lhs.equals(&sym)?, lhs.equals(&printed)?))
}

/// The defining relations of `Br_n^g` under the embedding, and the handle
/// relations for all `i ≤ m ≤ g`.
pub fn relation_suite_braid(g: u32, n: u32) -> Result<CheckReport> {
    let mut rep = CheckReport::new(format!("Br_{n}^{g} relations"));
    let inst = braid_relation_instances(g, n)?;
    let results: Vec<Result<bool>> = inst.par_iter().map(|r| r.lhs.equals(&r.rhs)).collect();
    for (r, ok) in inst.iter().zip(results) {
        rep.push(r.name.clone(), ok?, "");
    }
    if n >= 2 {
        for m in 1..=g {
            for i in 1..=m {
                let (sym, printed) = handle_relation(i, m, g, n, TauConvention::OwnGenus)?;
                rep.push(format!("handle relation i={i} m={m} (symmetric form)"), sym, "");
                rep.note(format!(
                    "handle relation i={i} m={m} in the unbalanced form (right side without the trailing τ_{{i,m}}): {}",
                    if printed { "holds" } else { "fails" }
                ));
                if m < g {
                    let (sym_g, _) = handle_relation(i, m, g, n, TauConvention::AmbientGenus)?;
                    rep.note(format!(
                        "handle relation i={i} m={m} with genus-{g} τ formulas: {}",
                        if sym_g { "holds" } else { "fails" }
                    ));
                }
            }
        }
    }
    Ok(rep)
}

/// The two sides of the handle relation in `SB_{g+n}`:
/// `τ_{i,g} σ̄_{g+1} τ_{i,g} ā_{g+1}` and `ā_{g+1} τ_{i,g} σ̄_{g+1} τ_{i,g}`.
pub fn handle_commutation_words(g: u32, n: u32, i: u32) -> Result<(SingularWord, SingularWord)> {
    if i < 1 || i > g {
        return Err(Error::InvalidArgument(format!("need 1 ≤ i ≤ g, got i={i} g={g}")));
    }
    if n < 2 {
        return Err(Error::InvalidArgument("need at least two moving strands".into()));
    }
    let amb = Ambient::classical(g + n)?;
    let tau: Vec<S> = tau_interval_classical(i, g, g)?.into_iter().map(S::from).collect();
    let (s, a) = (S::sigma(g + 1), S::a(g + 1));
    let lhs = [&tau[..], &[s], &tau[..], &[a]].concat();
    let rhs = [&[a], &tau[..], &[s], &tau[..]].concat();
    Ok((SingularWord::new(amb, lhs)?, SingularWord::new(amb, rhs)?))
}

/// `τ_{i,g} σ_1 τ_{i,g} a_1` and `a_1 τ_{i,g} σ_1 τ_{i,g}` in `SB_n^g`.
pub fn handle_commutation_words_local(g: u32, n: u32, i: u32) -> Result<(SingularWord, SingularWord)> {
    let amb = Ambient::new(g, n)?;
    let tau = tau_interval(i, g)?;
    let (s, a) = (S::sigma(1), S::a(1));
    let lhs = [&tau[..], &[s], &tau[..], &[a]].concat();
    let rhs = [&[a], &tau[..], &[s], &tau[..]].concat();
    Ok((SingularWord::new(amb, lhs)?, SingularWord::new(amb, rhs)?))
}

/// `σ̄_g σ̄_{g+1}² σ̄_g ā_{g+1}` and `ā_{g+1} σ̄_g σ̄_{g+1}² σ̄_g` in `SB_{g+2}`.
pub fn cubic_words(g: u32) -> Result<(SingularWord, SingularWord)> {
    if g < 1 {
        return Err(Error::InvalidArgument("genus must be positive".into()));
    }
    let amb = Ambient::classical(g + 2)?;
    let (x, y, a) = (S::sigma(g), S::sigma(g + 1), S::a(g + 1));
    Ok((SingularWord::new(amb, vec![x, y, y, x, a])?, SingularWord::new(amb, vec![a, x, y, y, x])?))
}

/// The handle relation in `SB_{g+n}` and in `SB_n^g`, both through the
/// expansion oracle, with a rewrite certificate attempted for the former.
pub fn handle_commutation_check(g: u32, n: u32, i: u32, depth: usize) -> Result<CheckReport> {
    let mut rep = CheckReport::new(format!("handle relation g={g} n={n} i={i}"));
    let (l, r) = handle_commutation_words(g, n, i)?;
    rep.push(format!("{l} = {r} in SB_{}", g + n), singular_words_equal(&l, &r)?, "expansion");
    let (cl, cr) = handle_commutation_words_local(g, n, i)?;
    rep.push(format!("{cl} = {cr} in SB_{n}^{g}"), singular_words_equal(&cl, &cr)?, "expansion");
    rep.push("handlebody form embeds onto the classical form", cl.embed() == l && cr.embed() == r, "");
    let opts = RewriteOptions { depth, ..Default::default() };
    match rewrite_derivation(&l, &r, opts) {
        Ok(Some(d)) => rep.push("rewrite certificate", d.verify(), format!("{} steps", d.len())),
        Ok(None) => rep.note(format!("no rewrite certificate within {depth} steps")),
        Err(e) if e.is_resource() => rep.note(format!("rewrite search stopped: {e}")),
        Err(e) => return Err(e),
    }
    if i == g {
        let (x, y) = cubic_words(g)?;
        rep.push(format!("{x} = {y}"), singular_words_equal(&x, &y)?, "expansion");
        match rewrite_derivation(&x, &y, opts)? {
            Some(d) => rep.push("rewrite certificate for the cubic form", d.verify(), format!("{} steps", d.len())),
            None => rep.note(format!("no rewrite certificate for the cubic form within {depth} steps")),
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid_suite_small() {
        for (g, n) in [(1, 2), (2, 3), (3, 2)] {
            let rep = relation_suite_braid(g, n).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn braid_suite_contains_examples() {
        let inst = braid_relation_instances(3, 2).unwrap();
        assert!(inst.iter().any(|r| r.name == "t1 s1^-1 t3 s1 = s1^-1 t3 s1 t1"));
        assert!(braid_relation_instances(1, 2).unwrap().iter().any(|r| r.name == "t1 s1 t1 s1 = s1 t1 s1 t1"));
    }

    #[test]
    fn singular_suite_small() {
        let rep = relation_suite_singular(4, &EybOperator::jones()).unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn printed_handle_relation_is_unbalanced() {
        let (sym, printed) = handle_relation(1, 1, 1, 2, TauConvention::OwnGenus).unwrap();
        assert!(sym);
        assert!(!printed);
    }

    #[test]
    fn handle_commutation_genus_one() {
        let rep = handle_commutation_check(1, 2, 1, 8).unwrap();
        assert!(rep.passed(), "{rep}");
        assert!(rep.items.iter().any(|i| i.label == "rewrite certificate"), "{rep}");
        assert!(rep.items.iter().any(|i| i.label == "rewrite certificate for the cubic form"), "{rep}");
    }

    #[test]
    fn handle_commutation_genus_two() {
        for i in 1..=2 {
            let rep = handle_commutation_check(2, 2, i, 4).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn wrong_handle_relation_fails() {
        // swapping ā and σ̄ on one side breaks it
        let (l, _) = handle_commutation_words(1, 2, 1).unwrap();
        let bad = SingularWord::new(l.ambient(), vec![S::a(1), S::sigma(1), S::sigma(1), S::sigma(2), S::sigma(1), S::sigma(1)]).unwrap();
        assert!(!singular_words_equal(&l, &bad).unwrap());
    }
}
