//! Markov traces from an enhanced Yang–Baxter operator.
//!
//! The raw Turaev value of a classical braid `w` on `m` strands is
//! `α^{-writhe(w)} β^{-m} tr(μ^{⊗m} ρ(w))`. It is invariant under conjugation
//! and under stabilization by `σ_m^{±1}` with factor 1, and it multiplies by
//! the quantum dimension `δ = β⁻¹ tr(μ)` when an unlinked strand is added.
//! [`trace_ts`] divides by `δ^c` where `c` is the number of closure
//! components, which keeps both stabilization factors equal to 1 and makes
//! the value insensitive to adding a split unknot; the unknot evaluates to 1.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::braid::{Ambient, BraidLetter, BraidWord, Generator};
use crate::error::{Error, Result};
use crate::eyb::EybOperator;
use crate::laurent::LaurentPoly;
use crate::matrix::PolyMatrix;
use crate::random;
use crate::report::CheckReport;
use crate::series::TruncatedSeries;
use crate::singular::{SingularGenerator, SingularWord};
use crate::vassiliev::AlgebraElement;

/// Default bound on `dim^m`, the size of the tensor space.
pub const DEFAULT_MAX_TENSOR_DIM: usize = 4096;

/// Environment variable overriding [`DEFAULT_MAX_TENSOR_DIM`].
pub const TENSOR_DIM_ENV: &str = "HBV_MAX_TENSOR_DIM";

pub fn max_tensor_dim() -> usize {
    std::env::var(TENSOR_DIM_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_TENSOR_DIM)
}

fn tensor_size(dim: usize, strands: u32) -> Result<usize> {
    let limit = max_tensor_dim();
    let mut size = 1usize;
    for _ in 0..strands {
        size = size.saturating_mul(dim);
        if size > limit {
            return Err(Error::Resource(format!(
                "tensor space {dim}^{strands} exceeds the bound {limit} (set {TENSOR_DIM_ENV} to raise it)"
            )));
        }
    }
    Ok(size)
}

/// Nonzero entries of a `dim²×dim²` matrix, grouped by column.
struct SparseColumns(Vec<Vec<(usize, LaurentPoly)>>);

impl SparseColumns {
    fn of(m: &PolyMatrix) -> Self {
        let n = m.size();
        SparseColumns(
            (0..n)
                .map(|c| (0..n).filter(|&r| !m.get(r, c).is_zero()).map(|r| (r, m.get(r, c).clone())).collect())
                .collect(),
        )
    }
}

/// Applies `R^{±1}` (or `R − R^{-1}` for code 0) on tensor factors
/// `(i, i+1)` to sparse vectors.
struct TensorAction<'a> {
    dim: usize,
    strands: u32,
    r: &'a SparseColumns,
    r_inv: &'a SparseColumns,
    skein: Option<&'a SparseColumns>,
}

impl TensorAction<'_> {
    fn place(&self, i: u32) -> usize {
        // factor k (1-based) has weight dim^(m-k)
        self.dim.pow(self.strands - i - 1)
    }

    fn apply(&self, letter: (u32, i8), v: &BTreeMap<usize, LaurentPoly>) -> BTreeMap<usize, LaurentPoly> {
        let (i, e) = letter;
        let cols = match e {
            0 => self.skein.expect("skein columns for singular letters"),
            e if e > 0 => self.r,
            _ => self.r_inv,
        };
        let lo = self.place(i);
        let hi = lo * self.dim;
        let mut out: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
        for (&idx, c) in v {
            let a = (idx / hi) % self.dim;
            let b = (idx / lo) % self.dim;
            let base = idx - a * hi - b * lo;
            for (row, entry) in &cols.0[a * self.dim + b] {
                let (a2, b2) = (row / self.dim, row % self.dim);
                let target = base + a2 * hi + b2 * lo;
                let prod = entry * c;
                let slot = out.entry(target).or_insert_with(LaurentPoly::zero);
                *slot += &prod;
            }
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// `ρ(w) e_basis` for a word given as `(index, exponent)` letters.
    fn column(&self, letters: &[(u32, i8)], basis: usize) -> BTreeMap<usize, LaurentPoly> {
        let mut v = BTreeMap::new();
        v.insert(basis, LaurentPoly::one());
        for &l in letters.iter().rev() {
            v = self.apply(l, &v);
        }
        v
    }
}

fn classical_letters(w: &BraidWord) -> Result<Vec<(u32, i8)>> {
    if !w.is_classical() {
        return Err(Error::InvalidArgument(format!("{w} is not a classical word")));
    }
    Ok(w.letters()
        .iter()
        .map(|l| match l.generator {
            Generator::Sigma(i) => (i, l.exp),
            Generator::Tau(_) => unreachable!(),
        })
        .collect())
}

/// The matrix `ρ(w)` on `V^{⊗m}`.
pub fn rho(w: &BraidWord, op: &EybOperator) -> Result<PolyMatrix> {
    let letters = classical_letters(w)?;
    let size = tensor_size(op.dim(), w.strands())?;
    let r = SparseColumns::of(op.r());
    let r_inv = SparseColumns::of(op.r_inv());
    let act = TensorAction { dim: op.dim(), strands: w.strands(), r: &r, r_inv: &r_inv, skein: None };
    let mut m = PolyMatrix::zero(size);
    for b in 0..size {
        for (row, val) in act.column(&letters, b) {
            m.set(row, b, val);
        }
    }
    Ok(m)
}

/// `ρ` extended to classical singular words by `ā_i ↦ R_i − R_i^{-1}`;
/// handlebody words are embedded first.
pub fn rho_singular(w: &SingularWord, op: &EybOperator) -> Result<PolyMatrix> {
    let w = w.embed();
    let strands = w.ambient().strands;
    let letters: Vec<(u32, i8)> = w
        .letters()
        .iter()
        .map(|l| match l.generator {
            SingularGenerator::Sigma(i) => (i, l.exp.signum() as i8),
            SingularGenerator::A(i) => (i, 0),
            SingularGenerator::Tau(_) => unreachable!("embedded words are classical"),
        })
        .collect();
    if w.letters().iter().any(|l| l.is_singular() && l.exp != 1) {
        return Err(Error::NotMonoid(w.to_string()));
    }
    let size = tensor_size(op.dim(), strands)?;
    let r = SparseColumns::of(op.r());
    let r_inv = SparseColumns::of(op.r_inv());
    let skein = SparseColumns::of(&op.r().sub(op.r_inv()));
    let act = TensorAction { dim: op.dim(), strands, r: &r, r_inv: &r_inv, skein: Some(&skein) };
    let mut m = PolyMatrix::zero(size);
    for b in 0..size {
        for (row, val) in act.column(&letters, b) {
            m.set(row, b, val);
        }
    }
    Ok(m)
}

fn mu_weight(op: &EybOperator, strands: u32, idx: usize) -> LaurentPoly {
    let d = op.dim();
    let mut w = LaurentPoly::one();
    let mut rest = idx;
    for _ in 0..strands {
        w = &w * &op.mu()[rest % d];
        rest /= d;
    }
    w
}

/// `tr(μ^{⊗m} ρ(w))`.
pub fn enhanced_matrix_trace(w: &BraidWord, op: &EybOperator) -> Result<LaurentPoly> {
    let letters = classical_letters(w)?;
    let size = tensor_size(op.dim(), w.strands())?;
    let r = SparseColumns::of(op.r());
    let r_inv = SparseColumns::of(op.r_inv());
    let act = TensorAction { dim: op.dim(), strands: w.strands(), r: &r, r_inv: &r_inv, skein: None };
    let total = (0..size)
        .into_par_iter()
        .map(|b| {
            let col = act.column(&letters, b);
            match col.get(&b) {
                Some(c) => c * &mu_weight(op, w.strands(), b),
                None => LaurentPoly::zero(),
            }
        })
        .reduce(LaurentPoly::zero, |a, b| a + b);
    Ok(total)
}

/// The unnormalized Turaev value `α^{-writhe} β^{-m} tr(μ^{⊗m} ρ(w))`.
pub fn turaev_trace(w: &BraidWord, op: &EybOperator) -> Result<LaurentPoly> {
    let tr = enhanced_matrix_trace(w, op)?;
    let a = op
        .alpha()
        .pow(-w.writhe())
        .map_err(|_| Error::Operator("α must be a unit to evaluate traces".into()))?;
    let b = op
        .beta()
        .pow(-(w.strands() as i64))
        .map_err(|_| Error::Operator("β must be a unit to evaluate traces".into()))?;
    Ok(&(&tr * &a) * &b)
}

/// An element `numerator / δ^power` of `ℤ[q^{±1}]` localized at the quantum
/// dimension `δ`, kept in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TraceValue {
    numerator: LaurentPoly,
    qdim: LaurentPoly,
    power: u32,
}

impl TraceValue {
    pub fn new(numerator: LaurentPoly, qdim: LaurentPoly, power: u32) -> Self {
        let mut num = numerator;
        let mut power = power;
        while power > 0 {
            match num.div_exact(&qdim) {
                Some(q) => {
                    num = q;
                    power -= 1;
                }
                None => break,
            }
        }
        if num.is_zero() {
            power = 0;
        }
        TraceValue { numerator: num, qdim, power }
    }

    pub fn polynomial(p: LaurentPoly, qdim: LaurentPoly) -> Self {
        TraceValue::new(p, qdim, 0)
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn qdim(&self) -> &LaurentPoly {
        &self.qdim
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// The Laurent polynomial when no denominator remains.
    pub fn as_polynomial(&self) -> Option<&LaurentPoly> {
        (self.power == 0).then_some(&self.numerator)
    }

    /// Multiplies back by `δ^power`: the value's numerator over `δ^power`.
    pub fn times_qdim_power(&self, k: u32) -> Option<LaurentPoly> {
        if k < self.power {
            return None;
        }
        Some(&self.numerator * &self.qdim.pow((k - self.power) as i64).ok()?)
    }
}

impl fmt::Display for TraceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.power {
            0 => write!(f, "{}", self.numerator),
            1 => write!(f, "({}) / ({})", self.numerator, self.qdim),
            p => write!(f, "({}) / ({})^{p}", self.numerator, self.qdim),
        }
    }
}

/// The normalized trace of a classical braid word; see the module docs.
pub fn trace_ts(w: &BraidWord, op: &EybOperator) -> Result<TraceValue> {
    let raw = turaev_trace(w, op)?;
    Ok(TraceValue::new(raw, op.quantum_dimension()?, w.closure_components()))
}

/// `φ`: kills `τ_1, …, τ_i`, renumbers `τ_j ↦ τ_{j−i}`, keeps every `σ_k`.
pub fn phi_collapse(w: &BraidWord, i: u32) -> Result<BraidWord> {
    let g = w.genus();
    if i > g {
        return Err(Error::InvalidArgument(format!("collapse level {i} exceeds genus {g}")));
    }
    let letters = w
        .letters()
        .iter()
        .filter_map(|l| match l.generator {
            Generator::Tau(j) if j <= i => None,
            Generator::Tau(j) => Some(BraidLetter { generator: Generator::Tau(j - i), exp: l.exp }),
            Generator::Sigma(_) => Some(*l),
        })
        .collect();
    BraidWord::new(Ambient::new(g - i, w.strands())?, letters)
}

/// `T_{S,i}`: collapse, embed, then take the normalized trace.
pub fn trace_tsi(w: &BraidWord, i: u32, op: &EybOperator) -> Result<TraceValue> {
    trace_ts(&phi_collapse(w, i)?.embed(), op)
}

/// A finite `K(ε)`-linear combination of trace values.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceCombination {
    order: i32,
    terms: BTreeMap<TraceValue, TruncatedSeries>,
}

impl TraceCombination {
    pub fn zero(order: i32) -> Self {
        TraceCombination { order, terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, value: TraceValue, coeff: TruncatedSeries) {
        if value.is_zero() || coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&value) {
            Some(c) => {
                *c = c.add(&coeff);
                if c.is_zero() {
                    self.terms.remove(&value);
                }
            }
            None => {
                self.terms.insert(value, coeff);
            }
        }
    }

    pub fn order(&self) -> i32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TraceValue, &TruncatedSeries)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, v: &TraceValue) -> Option<&TruncatedSeries> {
        self.terms.get(v)
    }
}

/// Linear extension of [`trace_tsi`] over the terms of an algebra element.
pub fn trace_on_algebra(x: &AlgebraElement, op: &EybOperator, i: u32) -> Result<TraceCombination> {
    let words: Vec<_> = x.terms().map(|(_, t)| (t.word.clone(), t.coeff.clone())).collect();
    let values: Vec<Result<(TraceValue, TruncatedSeries)>> = words
        .into_par_iter()
        .map(|(w, c)| trace_tsi(&w, i, op).map(|v| (v, c)))
        .collect();
    let mut out = TraceCombination::zero(x.order());
    for v in values {
        let (v, c) = v?;
        out.add_term(v, c);
    }
    Ok(out)
}

/// Commutativity and both-sign stabilization of `T_{S,i}` on random words of
/// `Br_n^g`, for every collapse level `i ≤ g`.
pub fn markov_axioms_test(
    op: &EybOperator,
    ambient: Ambient,
    trials: usize,
    max_len: usize,
    seed: u64,
) -> Result<CheckReport> {
    let mut rep = CheckReport::new(format!("Markov axioms {ambient}"));
    rep.note(format!("seed {seed}, {trials} trials, words of length ≤ {max_len}"));
    let mut rng = random::rng(seed);
    let cases: Vec<(BraidWord, BraidWord)> = (0..trials)
        .map(|_| (random::random_word(&mut rng, ambient, max_len), random::random_word(&mut rng, ambient, max_len)))
        .collect();
    let n = ambient.strands;
    let results: Vec<Result<Vec<(String, bool)>>> = cases
        .par_iter()
        .enumerate()
        .map(|(t, (x, y))| {
            let mut out = Vec::new();
            let xy = x.concat(y)?;
            let yx = y.concat(x)?;
            let bigger = x.with_strands(n + 1)?;
            let plus = bigger.concat(&BraidWord::new(bigger.ambient(), vec![BraidLetter::sigma(n)])?)?;
            let minus = bigger.concat(&BraidWord::new(bigger.ambient(), vec![BraidLetter::sigma_inv(n)])?)?;
            for i in 0..=ambient.genus {
                let comm = trace_tsi(&xy, i, op)? == trace_tsi(&yx, i, op)?;
                let base = trace_tsi(x, i, op)?;
                let stab_p = trace_tsi(&plus, i, op)? == base;
                let stab_m = trace_tsi(&minus, i, op)? == base;
                out.push((format!("trial {t} i={i}: T(xy) = T(yx)"), comm));
                out.push((format!("trial {t} i={i}: T(xσ_n) = T(x)"), stab_p));
                out.push((format!("trial {t} i={i}: T(xσ_n⁻¹) = T(x)"), stab_m));
            }
            Ok(out)
        })
        .collect();
    for r in results {
        for (label, ok) in r? {
            rep.push(label, ok, "");
        }
    }
    Ok(rep)
}
