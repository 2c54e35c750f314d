//! One PASS/FAIL line per acceptance criterion, run in order so the
//! timings do not compete with each other. Exits 1 if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use handlebody_braids::braid::{Ambient, BraidWord};
use handlebody_braids::cli::parse_braid_word;
use handlebody_braids::eyb::EybOperator;
use handlebody_braids::invariants::{degree_vanishing_check, link_invariant, markov_moves_harness, trace_ti_word, unknot_union_check};
use handlebody_braids::laurent::LaurentPoly;
use handlebody_braids::report::CheckReport;
use handlebody_braids::singular::{SingularLetter, SingularWord};
use handlebody_braids::suites;
use handlebody_braids::trace::{trace_ts, TraceValue};

const SEED: u64 = suites::DEFAULT_SEED;

struct Outcome {
    passed: bool,
    detail: String,
}

fn from_report(rep: &CheckReport) -> Outcome {
    let (ok, total) = rep.count();
    let first = rep.failures().next().map(|f| format!("; first failure: {}", f.label)).unwrap_or_default();
    Outcome { passed: rep.passed() && total > 0, detail: format!("{ok}/{total} checks{first}") }
}

fn merged(name: &str, reps: impl IntoIterator<Item = CheckReport>) -> CheckReport {
    let mut all = CheckReport::new(name);
    for r in reps {
        all.extend(r);
    }
    all
}

fn word(g: u32, n: u32, text: &str) -> BraidWord {
    parse_braid_word(text, Ambient::new(g, n).unwrap()).unwrap()
}

fn relations() -> Outcome {
    let a = suites::relations1(6, &EybOperator::jones()).unwrap();
    let b = suites::relations2(3, 4).unwrap();
    from_report(&merged("relations", [a, b]))
}

fn handle_relations() -> Outcome {
    let rep = suites::prop1(3, 2, 8).unwrap();
    let mut out = from_report(&rep);
    let certified = |what: &str| {
        rep.items.iter().any(|it| it.label.starts_with("handle relation g=1 n=2 i=1") && it.label.ends_with(what) && it.passed)
    };
    let cert = certified("rewrite certificate");
    let cubic = certified("rewrite certificate for the cubic form");
    out.passed &= cert && cubic;
    out.detail += &format!(", g=1 certificates: handlebody form {cert}, cubic form {cubic}");
    out
}

fn eyb_axioms() -> Outcome {
    let op = EybOperator::jones();
    let good = op.axioms_check();
    let mut r = op.r().clone();
    r.set(3, 3, LaurentPoly::from_terms([(1, 2)]));
    let bad = EybOperator::new_unchecked("corrupted", r, op.r_inv().clone(), op.mu().to_vec(), op.alpha().clone(), op.beta().clone())
        .unwrap()
        .axioms_check();
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/broken.toml")).unwrap();
    let file_rejected = EybOperator::from_toml(&text).is_err();
    let (ok, total) = good.count();
    let (bad_ok, bad_total) = bad.count();
    Outcome {
        passed: good.passed() && total == 5 && !bad.passed() && file_rejected,
        detail: format!("jones {ok}/{total}, corrupted {bad_ok}/{bad_total}, broken file rejected {file_rejected}"),
    }
}

fn markov_axioms() -> Outcome {
    from_report(&suites::markov(2, 4, 100, SEED, &EybOperator::jones()).unwrap())
}

fn oracle() -> Outcome {
    let op = EybOperator::jones();
    let delta = op.quantum_dimension().unwrap();
    let mut fails = Vec::new();
    for (name, gens) in [("trefoil", &[1, 1, 1][..]), ("Hopf link", &[1, 1]), ("mirror trefoil", &[-1, -1, -1])] {
        let f = common::a_squared_to_q(&common::normalized_bracket(2, gens), 1).unwrap();
        let c = common::closure_components(2, gens) as u32;
        let want = TraceValue::new(LaurentPoly::from_terms(f), delta.clone(), c - 1);
        let got = trace_ts(&BraidWord::classical(2, gens).unwrap(), &op).unwrap();
        if got != want {
            fails.push(format!("{name}: {got} vs {want}"));
        }
    }
    Outcome { passed: fails.is_empty(), detail: if fails.is_empty() { "3/3 links, A² = −q".into() } else { fails.join("; ") } }
}

const UNION_WORDS: [(u32, u32, &str); 20] = [
    (0, 1, ""),
    (0, 2, "s1 s1 s1"),
    (0, 2, "s1 s1"),
    (0, 2, "s1^-3"),
    (0, 3, "s1 s2^-1 s1 s2^-1"),
    (0, 3, "s1 s1 s2"),
    (0, 3, "s1 s2 s1 s2 s1 s2"),
    (0, 4, "s1 s2 s3 s1^-1"),
    (1, 1, ""),
    (1, 1, "t1"),
    (1, 1, "t1^-2"),
    (1, 2, "t1 s1"),
    (1, 2, "t1 s1 t1^-1 s1"),
    (1, 2, "s1 s1 t1"),
    (1, 3, "t1 s2 s1^-1"),
    (2, 1, "t1 t2"),
    (2, 2, "t1 s1 t2^-1 s1"),
    (2, 2, "t2 t2 s1^-1"),
    (3, 1, "t1 t2^-1 t3"),
    (3, 2, "t3 s1 t1"),
];

const HARNESS_STARTS: [(u32, u32, &str); 5] =
    [(0, 2, "s1 s1 s1"), (1, 2, "t1 s1"), (1, 1, "t1^-1"), (2, 2, "t1 s1 t2^-1 s1"), (0, 3, "s1 s2^-1 s1 s2^-1")];

fn trace_consistency() -> Outcome {
    let op = EybOperator::jones();
    let order = 4;
    let union = merged(
        "unknot union",
        UNION_WORDS.iter().flat_map(|&(g, n, t)| {
            let w = word(g, n, t);
            let op = &op;
            (0..=g).flat_map(move |i| {
                let w = w.clone();
                (0..=order).map(move |d| unknot_union_check(&w, i, d, op, order).unwrap())
            })
        }),
    );
    let harness = merged(
        "harness",
        (0..20u64).map(|k| {
            let (g, n, t) = HARNESS_STARTS[k as usize % HARNESS_STARTS.len()];
            markov_moves_harness(&word(g, n, t), 50, SEED + k, &op, order).unwrap()
        }),
    );
    // same link drawn on n and n+1 strands: L = z^{1-n} T read at each n
    let mut scaling = CheckReport::new("two presentations");
    for (g, a, b) in [(0, (2, "s1 s1 s1"), (3, "s1 s1 s1 s2")), (1, (2, "t1 s1"), (3, "t1 s1 s2^-1")), (0, (2, "s1 s1"), (3, "s1 s2^-1 s1"))] {
        let (u, v) = (word(g, a.0, a.1), word(g, b.0, b.1));
        for i in 0..=g {
            let tu = trace_ti_word(&u, i, &op, order).unwrap();
            let tv = trace_ti_word(&v, i, &op, order).unwrap();
            for d in 0..=order {
                let lu = link_invariant(&u, i, d, &op, order).unwrap().value;
                let lv = link_invariant(&v, i, d, &op, order).unwrap().value;
                let ok = lu == tu.coeff(d) && lv == tv.coeff(d) && lu == lv;
                scaling.push(format!("{u} ~ {v} i={i} d={d}"), ok, "");
            }
        }
    }
    let (u_ok, u_total) = union.count();
    let (h_ok, h_total) = harness.count();
    let (s_ok, s_total) = scaling.count();
    Outcome {
        passed: union.passed() && harness.passed() && scaling.passed(),
        detail: format!("unknot union {u_ok}/{u_total}, 20 orbits {h_ok}/{h_total} moves, two presentations {s_ok}/{s_total}"),
    }
}

fn pure_singular_words() -> Vec<SingularWord> {
    let mut out = Vec::new();
    for g in 0..=2 {
        for n in 2..=3u32 {
            let amb = Ambient::new(g, n).unwrap();
            for l in 1..=4u32 {
                let choices = (n - 1).pow(l);
                for code in 0..choices {
                    let mut c = code;
                    let letters = (0..l)
                        .map(|_| {
                            let i = 1 + c % (n - 1);
                            c /= n - 1;
                            SingularLetter::a(i)
                        })
                        .collect();
                    out.push(SingularWord::new(amb, letters).unwrap());
                }
            }
        }
    }
    out
}

fn finite_type() -> Outcome {
    let op = EybOperator::jones();
    let order = 6;
    let mut corpus = suites::vanishing_corpus(2, 3, 10, SEED).unwrap();
    corpus.extend(pure_singular_words());
    let words = corpus.len();
    let rep = merged(
        "finite type",
        corpus.iter().flat_map(|s| {
            let op = &op;
            (0..=s.ambient().genus).flat_map(move |i| (0..=3).map(move |d| degree_vanishing_check(s, i, d, op, order).unwrap()))
        }),
    );
    let mut out = from_report(&rep);
    out.detail = format!("{words} words, {}", out.detail);
    out
}

fn separation() -> Outcome {
    let op = EybOperator::jones();
    let order = 4;
    let trefoil = word(0, 2, "s1 s1 s1");
    let unknot = word(0, 1, "");
    let mut separating = Vec::new();
    for d in 0..=4 {
        let a = link_invariant(&trefoil, 0, d, &op, order).unwrap().value;
        let b = link_invariant(&unknot, 0, d, &op, order).unwrap().value;
        if a != b {
            separating.push(format!("d={d} ({a} vs {b})"));
        }
    }
    Outcome {
        passed: !separating.is_empty(),
        detail: if separating.is_empty() { "no d ≤ 4 separates".into() } else { format!("separating: {}", separating.join(", ")) },
    }
}

fn main() {
    type Criterion = (u32, &'static str, u64, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        (1, "relation suites", 60, relations),
        (2, "handle relations with certificates", 120, handle_relations),
        (3, "EYB axioms and negative control", 5, eyb_axioms),
        (4, "Markov trace axioms", 120, markov_axioms),
        (5, "Kauffman bracket oracle", 10, oracle),
        (6, "unknot union, Markov orbits, two presentations", 180, trace_consistency),
        (7, "finite type vanishing and pole cancellation", 300, finite_type),
        (8, "trefoil vs unknot separation", 30, separation),
    ];
    let mut failed = 0;
    for (k, name, limit, run) in criteria {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let in_time = took < Duration::from_secs(limit);
        let ok = out.passed && in_time;
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {k}: {} {name} [{:.2}s, limit {limit}s] {}",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            out.detail
        );
    }
    println!("acceptance: {}/8 passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
