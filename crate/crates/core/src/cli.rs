//! Word syntax, the `hbv` command line, and its JSON output records.
//!
//! Words are whitespace-separated tokens `s<i>`, `t<k>`, `a<i>`, each
//! optionally followed by `^<k>`; `^k` expands into `|k|` copies of the
//! letter or its inverse.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::braid::{Ambient, BraidWord};
use crate::error::{Error, Result};
use crate::eyb::EybOperator;
use crate::invariants::{extended_invariant, link_invariant, trace_ti_singular, InvariantResult};
use crate::report::CheckReport;
use crate::series::{format_rational, TruncatedSeries};
use crate::singular::{SingularGenerator, SingularLetter, SingularWord};
use crate::suites::{run_suite, Suite, SuiteParams};
use crate::trace::trace_tsi;
use crate::vassiliev::DEFAULT_ORDER;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_SUITE_FAILED: i32 = 4;

/// Version of the JSON output layout, bumped on incompatible changes.
pub const SCHEMA_VERSION: u32 = 1;

fn tokenize(text: &str) -> Result<Vec<(usize, SingularLetter)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        if bytes[pos].is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        let kind = bytes[pos];
        pos += 1;
        let digits = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let syntax = |position: usize, message: String| Error::Syntax { position, message };
        if !matches!(kind, b's' | b't' | b'a') {
            return Err(syntax(start, format!("expected s, t or a, found {:?}", text[start..].chars().next().unwrap())));
        }
        if digits == pos {
            return Err(syntax(digits, "expected a generator index".into()));
        }
        let index: u32 = text[digits..pos].parse().map_err(|_| syntax(digits, "index too large".into()))?;
        if index == 0 {
            return Err(syntax(digits, "indices start at 1".into()));
        }
        let mut exp: i64 = 1;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let e_start = pos;
            if pos < bytes.len() && bytes[pos] == b'-' {
                pos += 1;
            }
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            exp = text[e_start..pos].parse().map_err(|_| syntax(e_start, "expected an integer exponent".into()))?;
            if exp == 0 {
                return Err(syntax(e_start, "exponent 0".into()));
            }
            if exp.unsigned_abs() > 1000 {
                return Err(syntax(e_start, "exponent too large".into()));
            }
        }
        if pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            return Err(syntax(pos, format!("unexpected {:?}", text[pos..].chars().next().unwrap())));
        }
        let generator = match kind {
            b's' => SingularGenerator::Sigma(index),
            b't' => SingularGenerator::Tau(index),
            _ => SingularGenerator::A(index),
        };
        if kind == b'a' && exp < 0 {
            return Err(Error::NotMonoid(format!("a{index}^{exp} at byte {start}")));
        }
        let sign = exp.signum() as i32;
        for _ in 0..exp.unsigned_abs() {
            out.push((start, SingularLetter { generator, exp: sign }));
        }
    }
    Ok(out)
}

fn check_range(tokens: &[(usize, SingularLetter)], ambient: Ambient) -> Result<()> {
    for (k, (_, l)) in tokens.iter().enumerate() {
        let ok = match l.generator {
            SingularGenerator::Sigma(i) | SingularGenerator::A(i) => i < ambient.strands,
            SingularGenerator::Tau(t) => t <= ambient.genus,
        };
        if !ok {
            return Err(Error::IndexOutOfRange {
                position: k,
                letter: l.to_string(),
                genus: ambient.genus,
                strands: ambient.strands,
            });
        }
    }
    Ok(())
}

/// Parses a monoid word; `a` letters are rejected unless `allow_singular`.
pub fn parse_word(text: &str, ambient: Ambient, allow_singular: bool) -> Result<SingularWord> {
    let tokens = tokenize(text)?;
    if !allow_singular {
        if let Some((pos, l)) = tokens.iter().find(|(_, l)| l.is_singular()) {
            return Err(Error::Syntax { position: *pos, message: format!("{l} is not allowed in a braid word") });
        }
    }
    check_range(&tokens, ambient)?;
    SingularWord::new(ambient, tokens.into_iter().map(|(_, l)| l).collect())
}

pub fn parse_braid_word(text: &str, ambient: Ambient) -> Result<BraidWord> {
    Ok(parse_word(text, ambient, false)?.as_braid().expect("no double points"))
}

/// Canonical spelling: single spaces, `^-1` for inverses.
pub fn print_word(w: &SingularWord) -> String {
    w.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputMetadata {
    pub writhe: i64,
    pub components: u32,
    pub singular_points: usize,
    pub operator: String,
    pub convention_id: String,
    pub seed: Option<u64>,
    pub truncated: bool,
    pub integral: bool,
    /// `T_{S,i}` as a rational function of `q` when the input has no double
    /// points.
    pub trace: Option<String>,
}

/// Machine-readable result of `hbv invariant` and `hbv trace`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: u32,
    pub command: String,
    pub word: String,
    pub g: u32,
    pub n: u32,
    pub i: u32,
    pub d: Option<i32>,
    #[serde(rename = "D")]
    pub order: i32,
    pub value: Option<String>,
    pub series: Vec<(i32, String)>,
    pub metadata: OutputMetadata,
}

impl OutputRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let w = if self.word.is_empty() { "e" } else { &self.word };
        s.push_str(&format!("word        {w}\n"));
        s.push_str(&format!("ambient     g={} n={}\n", self.g, self.n));
        s.push_str(&format!("level       i={}\n", self.i));
        if let (Some(d), Some(v)) = (self.d, &self.value) {
            s.push_str(&format!("L_{{{},{d}}}      {v}\n", self.i));
        }
        let series = TruncatedSeries::from_terms(
            self.series.iter().map(|(e, c)| (*e, crate::series::parse_rational(c).expect("own output"))),
            self.order,
        );
        s.push_str(&format!("T_i         {series} + O(ε^{})\n", self.order + 1));
        if let Some(t) = &self.metadata.trace {
            s.push_str(&format!("T_S,i       {t}\n"));
        }
        s.push_str(&format!(
            "metadata    writhe={} components={} double points={} integral={}\n",
            self.metadata.writhe, self.metadata.components, self.metadata.singular_points, self.metadata.integral
        ));
        s.push_str(&format!("operator    {} [{}]\n", self.metadata.operator, self.metadata.convention_id));
        s
    }
}

fn record(command: &str, r: &InvariantResult, d: Option<i32>, op: &EybOperator, trace: Option<String>) -> OutputRecord {
    OutputRecord {
        schema_version: SCHEMA_VERSION,
        command: command.into(),
        word: r.word.clone(),
        g: r.genus,
        n: r.strands,
        i: r.i,
        d,
        order: r.order,
        value: d.map(|_| format_rational(&r.value)),
        series: r.series.to_pairs(),
        metadata: OutputMetadata {
            writhe: r.writhe,
            components: r.components,
            singular_points: r.singular_points,
            operator: op.name().to_string(),
            convention_id: op.convention_id(),
            seed: None,
            truncated: r.series.is_truncated(),
            integral: r.series.is_integral(),
            trace,
        },
    }
}

#[derive(Debug, Parser)]
#[command(name = "hbv", version, about = "Finite-type invariants of links in handlebodies from braid words")]
pub struct Cli {
    /// Enhanced Yang–Baxter operator file (TOML); the built-in Jones operator otherwise.
    #[arg(long, global = true)]
    pub operator: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct WordArgs {
    #[arg(long, default_value_t = 0)]
    pub genus: u32,
    #[arg(long)]
    pub strands: u32,
    /// e.g. "t1 s1^-1 a2"
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    /// Collapse level: handles 1..=i are forgotten.
    #[arg(long, default_value_t = 0)]
    pub i: u32,
    /// Truncation order of the ε series.
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    pub order: i32,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The invariant L_{i,d} of the closure of a word (extended to double points).
    Invariant {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        d: i32,
    },
    /// The series T_i of a word; double points are expanded.
    Trace {
        #[command(flatten)]
        word: WordArgs,
    },
    /// Run a verification suite.
    Check {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(Suite::ALL.map(|s| s.name())))]
        suite: String,
        #[arg(long)]
        genus: Option<u32>,
        #[arg(long)]
        strands: Option<u32>,
        /// Rewrite search depth.
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        order: Option<i32>,
        #[arg(long)]
        json: bool,
        /// Print only failures and the summary line.
        #[arg(long)]
        quiet: bool,
    },
}

pub fn load_operator(path: Option<&PathBuf>) -> Result<EybOperator> {
    match path {
        None => Ok(EybOperator::jones()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            EybOperator::from_toml(&text)
        }
    }
}

fn ambient_of(a: &WordArgs) -> Result<Ambient> {
    Ambient::new(a.genus, a.strands)
}

pub fn cmd_invariant(a: &WordArgs, d: i32, op: &EybOperator) -> Result<OutputRecord> {
    let w = parse_word(&a.word, ambient_of(a)?, true)?;
    match w.as_braid() {
        Some(b) => {
            let r = link_invariant(&b, a.i, d, op, a.order)?;
            let t = trace_tsi(&b, a.i, op)?;
            Ok(record("invariant", &r, Some(d), op, Some(t.to_string())))
        }
        None => {
            let r = extended_invariant(&w, a.i, d, op, a.order)?;
            Ok(record("invariant", &r, Some(d), op, None))
        }
    }
}

pub fn cmd_trace(a: &WordArgs, op: &EybOperator) -> Result<OutputRecord> {
    let w = parse_word(&a.word, ambient_of(a)?, true)?;
    if a.i > w.ambient().genus {
        return Err(Error::InvalidArgument(format!("collapse level {} exceeds genus {}", a.i, a.genus)));
    }
    let series = trace_ti_singular(&w, a.i, op, a.order)?;
    let h = w.desingularize_h()?;
    let trace = match w.as_braid() {
        Some(b) => Some(trace_tsi(&b, a.i, op)?.to_string()),
        None => None,
    };
    let r = InvariantResult {
        word: w.to_string(),
        genus: a.genus,
        strands: a.strands,
        i: a.i,
        d: 0,
        order: a.order,
        singular_points: w.singular_count(),
        value: series.coeff(0),
        series,
        writhe: h.writhe(),
        components: h.closure_components(),
        convention_id: op.convention_id(),
    };
    Ok(record("trace", &r, None, op, trace))
}

pub fn cmd_check(suite: &str, params: &SuiteParams, op: &EybOperator) -> Result<CheckReport> {
    let suite: Suite = suite.parse()?;
    run_suite(suite, params, op)
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_resource() { EXIT_RESOURCE } else { EXIT_USAGE }
}

fn quiet_report(rep: &CheckReport) -> String {
    let (ok, total) = rep.count();
    let mut s = format!("{}: {ok}/{total} passed\n", rep.name);
    for f in rep.failures() {
        s.push_str(&format!("  [FAIL] {} {}\n", f.label, f.detail));
    }
    for n in &rep.notes {
        s.push_str(&format!("  note: {n}\n"));
    }
    s
}

/// Runs a parsed command line, writing to stdout/stderr; returns the exit code.
pub fn run(cli: Cli) -> i32 {
    let op = match load_operator(cli.operator.as_ref()) {
        Ok(op) => op,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let out = match &cli.command {
        Command::Invariant { word, d } => cmd_invariant(word, *d, &op).map(|r| if word.json { r.to_json() } else { r.to_table() }),
        Command::Trace { word } => cmd_trace(word, &op).map(|r| if word.json { r.to_json() } else { r.to_table() }),
        Command::Check { suite, genus, strands, depth, seed, trials, order, json, quiet } => {
            let params = SuiteParams { genus: *genus, strands: *strands, depth: *depth, seed: *seed, trials: *trials, order: *order };
            match cmd_check(suite, &params, &op) {
                Ok(rep) => {
                    let text = if *json {
                        serde_json::to_string_pretty(&rep).expect("reports serialize")
                    } else if *quiet {
                        quiet_report(&rep)
                    } else {
                        rep.to_string()
                    };
                    println!("{}", text.trim_end());
                    return if rep.passed() { EXIT_OK } else { EXIT_SUITE_FAILED };
                }
                Err(e) => Err(e),
            }
        }
    };
    match out {
        Ok(text) => {
            println!("{}", text.trim_end());
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// Parses `args` and runs; clap's own help and version output exit 0.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() { EXIT_USAGE } else { EXIT_OK }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidLetter;
    use SingularLetter as S;

    fn amb(g: u32, n: u32) -> Ambient {
        Ambient::new(g, n).unwrap()
    }

    #[test]
    fn parse_examples() {
        let w = parse_braid_word("s1 s1 s1", amb(0, 2)).unwrap();
        assert_eq!(w.letters(), &[BraidLetter::sigma(1); 3]);
        let w = parse_word("t1 s1^-1 a2", amb(1, 3), true).unwrap();
        assert_eq!(w.letters(), &[S::tau(1), S::sigma_inv(1), S::a(2)]);
        assert!(matches!(parse_word("s5", amb(0, 3), false), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_word("s1 x2", amb(0, 3), false), Err(Error::Syntax { position: 3, .. })));
        assert!(matches!(parse_word("s", amb(0, 3), false), Err(Error::Syntax { position: 1, .. })));
        assert!(matches!(parse_word("s1^", amb(0, 3), false), Err(Error::Syntax { position: 3, .. })));
        assert!(matches!(parse_word("s0", amb(0, 3), false), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("s1s2", amb(0, 3), false), Err(Error::Syntax { position: 2, .. })));
        assert!(matches!(parse_word("a1", amb(0, 3), false), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("a1^-1", amb(0, 3), true), Err(Error::NotMonoid(_))));
        assert!(matches!(parse_word("t2", amb(1, 3), false), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn exponents_expand() {
        let w = parse_word("s1^3 t1^-2", amb(1, 2), false).unwrap();
        assert_eq!(print_word(&w), "s1 s1 s1 t1^-1 t1^-1");
        assert!(parse_word("", amb(0, 1), false).unwrap().is_empty());
    }

    #[test]
    fn round_trip() {
        let w = parse_word("  t1   s1^-1\ta2 a1 ", amb(1, 3), true).unwrap();
        let p = print_word(&w);
        assert_eq!(p, "t1 s1^-1 a2 a1");
        assert_eq!(parse_word(&p, amb(1, 3), true).unwrap(), w);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(main_with_args(["hbv", "check", "--suite", "bogus"]), EXIT_USAGE);
        assert_eq!(main_with_args(["hbv", "invariant", "--strands", "2", "--word", "s3", "--d", "0"]), EXIT_USAGE);
        assert_eq!(main_with_args(["hbv", "trace", "--strands", "13", "--word", ""]), EXIT_RESOURCE);
        assert_eq!(main_with_args(["hbv", "check", "--suite", "eyb", "--quiet"]), EXIT_OK);
    }

    #[test]
    fn invariant_records() {
        let op = EybOperator::jones();
        let args = WordArgs { genus: 0, strands: 1, word: String::new(), i: 0, order: 4, json: true };
        let r = cmd_invariant(&args, 0, &op).unwrap();
        assert_eq!(r.value.as_deref(), Some("1"));
        assert_eq!(r.schema_version, SCHEMA_VERSION);
        let back: OutputRecord = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let t = cmd_trace(&args, &op).unwrap();
        assert_eq!(t.series, vec![(0, "1".to_string())]);
    }
}
