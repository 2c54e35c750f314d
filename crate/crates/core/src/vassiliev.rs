//! The Vassiliev algebra through its image in `K(ε) Br_{g+n}`.
//!
//! Elements are finite sums `Σ c_b · b` over braid group elements `b` with
//! truncated-series coefficients. A term is keyed by the Artin signature of
//! the embedded classical braid, so equal group elements always merge; each
//! term also keeps a reduced handlebody word that represents it, which the
//! trace needs for the collapse maps.

use std::collections::BTreeMap;
use std::fmt;

use crate::braid::{Ambient, BraidLetter, BraidWord, Generator};
use crate::error::{Error, Result};
use crate::free_group::{ArtinSignature, DEFAULT_IMAGE_LIMIT};
use crate::series::{integer, Rational, TruncatedSeries};
use crate::singular::{SingularGenerator, SingularWord};

pub const DEFAULT_ORDER: i32 = 8;

/// Largest number of double points `expand` accepts (`2^20` terms).
pub const MAX_SINGULAR_LETTERS: usize = 20;

#[derive(Debug, Clone)]
pub struct AlgebraTerm {
    pub word: BraidWord,
    pub coeff: TruncatedSeries,
}

#[derive(Debug, Clone)]
pub struct AlgebraElement {
    ambient: Ambient,
    order: i32,
    terms: BTreeMap<ArtinSignature, AlgebraTerm>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient
            && self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(&other.terms)
                .all(|((ka, ta), (kb, tb))| ka == kb && ta.coeff.terms().eq(tb.coeff.terms()))
    }
}

impl AlgebraElement {
    pub fn zero(ambient: Ambient, order: i32) -> Self {
        AlgebraElement { ambient, order, terms: BTreeMap::new() }
    }

    pub fn one(ambient: Ambient, order: i32) -> Self {
        AlgebraElement::from_word(&BraidWord::identity(ambient), TruncatedSeries::one(order))
            .expect("identity word has a signature")
    }

    /// `coeff · w`.
    pub fn from_word(w: &BraidWord, coeff: TruncatedSeries) -> Result<Self> {
        let mut x = AlgebraElement::zero(w.ambient(), coeff.order());
        let w = w.free_reduce();
        let key = w.artin_signature()?;
        x.add_term(key, w, coeff);
        Ok(x)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn order(&self) -> i32 {
        self.order
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ArtinSignature, &AlgebraTerm)> {
        self.terms.iter()
    }

    /// Coefficient of the group element represented by `w`.
    pub fn coeff_of(&self, w: &BraidWord) -> Result<TruncatedSeries> {
        let key = w.artin_signature()?;
        Ok(self
            .terms
            .get(&key)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(|| TruncatedSeries::zero(self.order)))
    }

    fn add_term(&mut self, key: ArtinSignature, word: BraidWord, coeff: TruncatedSeries) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(t) => {
                t.coeff = t.coeff.add(&coeff);
                if t.coeff.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, AlgebraTerm { word, coeff });
            }
        }
    }

    fn check_ambient(&self, other: &AlgebraElement) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(
                self.ambient.to_string(),
                other.ambient.to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        out.order = self.order.min(other.order);
        for (k, t) in &other.terms {
            out.add_term(k.clone(), t.word.clone(), t.coeff.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> AlgebraElement {
        self.map_coeffs(|c| c.neg())
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &TruncatedSeries) -> AlgebraElement {
        self.map_coeffs(|c| c.mul(s))
    }

    /// Multiplies every coefficient by `ε^k`.
    pub fn shift_eps(&self, k: i32) -> AlgebraElement {
        self.map_coeffs(|c| c.shift(k))
    }

    fn map_coeffs(&self, f: impl Fn(&TruncatedSeries) -> TruncatedSeries) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.ambient, self.order);
        for (k, t) in &self.terms {
            out.add_term(k.clone(), t.word.clone(), f(&t.coeff));
        }
        out
    }

    /// Bilinear product: representative words are concatenated and the keys
    /// composed.
    pub fn mul(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_ambient(other)?;
        let mut out = AlgebraElement::zero(self.ambient, self.order.min(other.order));
        for (ka, ta) in &self.terms {
            for (kb, tb) in &other.terms {
                let word = ta.word.concat(&tb.word)?.free_reduce();
                let key = ka.then(kb);
                if key.total_len() > DEFAULT_IMAGE_LIMIT {
                    return Err(Error::Resource("Artin images too long".into()));
                }
                out.add_term(key, word, ta.coeff.mul(&tb.coeff));
            }
        }
        Ok(out)
    }

    /// The map `α` into the algebra of the classical group on `g + n` strands.
    pub fn alpha(&self) -> AlgebraElement {
        let ambient = Ambient { genus: 0, strands: self.ambient.total_strands() };
        let mut out = AlgebraElement::zero(ambient, self.order);
        for (k, t) in &self.terms {
            out.add_term(k.clone(), t.word.embed(), t.coeff.clone());
        }
        out
    }

    /// Sum of all coefficients (every group element sent to 1).
    pub fn augmentation(&self) -> TruncatedSeries {
        self.terms
            .values()
            .fold(TruncatedSeries::zero(self.order), |acc, t| acc.add(&t.coeff))
    }

    /// Smallest `ε` exponent among all coefficients.
    pub fn valuation(&self) -> Option<i32> {
        self.terms.values().filter_map(|t| t.coeff.valuation()).min()
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .values()
            .map(|t| {
                let w = if t.word.is_empty() { "e".to_string() } else { t.word.to_string() };
                format!("({})·[{}]", t.coeff.to_string().trim_end_matches(&format!(" + O(ε^{})", t.coeff.order() + 1)), w)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `a_i ↦ ε^{-1}(σ_i − σ_i^{-1})`, distributed over the whole word.
pub fn expand(w: &SingularWord, order: i32) -> Result<AlgebraElement> {
    w.require_monoid()?;
    let l = w.singular_count();
    if l > MAX_SINGULAR_LETTERS {
        return Err(Error::Resource(format!(
            "{l} singular letters; expansion is capped at {MAX_SINGULAR_LETTERS}"
        )));
    }
    let ambient = w.ambient();
    let g = ambient.genus;
    let total = ambient.total_strands();

    // partial products: (letters, signature, sign)
    let mut partial: Vec<(Vec<BraidLetter>, ArtinSignature, i64)> =
        vec![(Vec::new(), ArtinSignature::identity(total), 1)];
    for letter in w.letters() {
        let choices: Vec<(BraidLetter, i64)> = match letter.generator {
            SingularGenerator::Sigma(i) => vec![(BraidLetter { generator: Generator::Sigma(i), exp: letter.exp as i8 }, 1)],
            SingularGenerator::Tau(k) => vec![(BraidLetter { generator: Generator::Tau(k), exp: letter.exp as i8 }, 1)],
            SingularGenerator::A(i) => vec![(BraidLetter::sigma(i), 1), (BraidLetter::sigma_inv(i), -1)],
        };
        let mut next = Vec::with_capacity(partial.len() * choices.len());
        for (letters, sig, sign) in &partial {
            for &(bl, s) in &choices {
                let mut sig = sig.clone();
                for (idx, e) in classical_letters(bl, g) {
                    sig.push_generator(idx, e);
                }
                if sig.total_len() > DEFAULT_IMAGE_LIMIT {
                    return Err(Error::Resource("Artin images too long".into()));
                }
                let mut letters = letters.clone();
                letters.push(bl);
                next.push((letters, sig, sign * s));
            }
        }
        partial = next;
    }

    let mut out = AlgebraElement::zero(ambient, order);
    let pole = -(l as i32);
    for (letters, sig, sign) in partial {
        let word = BraidWord::new(ambient, letters)?.free_reduce();
        out.add_term(sig, word, TruncatedSeries::monomial(integer(sign), pole, order));
    }
    Ok(out)
}

fn classical_letters(l: BraidLetter, genus: u32) -> Vec<(u32, i8)> {
    match l.generator {
        Generator::Sigma(i) => vec![(i + genus, l.exp)],
        Generator::Tau(_) => BraidWord::new(Ambient { genus, strands: 1 }, vec![l])
            .expect("validated τ index")
            .classical_generators(),
    }
}

/// `v^g`: a braid word as an algebra element with coefficient 1.
pub fn v_g_map(w: &BraidWord, order: i32) -> Result<AlgebraElement> {
    AlgebraElement::from_word(w, TruncatedSeries::one(order))
}

/// Equality in the singular braid monoid, decided through the expansion.
pub fn singular_words_equal(u: &SingularWord, v: &SingularWord) -> Result<bool> {
    if u.ambient() != v.ambient() {
        return Err(Error::AmbientMismatch(u.ambient().to_string(), v.ambient().to_string()));
    }
    u.require_monoid()?;
    v.require_monoid()?;
    if u.letters() == v.letters() {
        return Ok(true);
    }
    // the expansion never produces positive ε powers, so order 0 loses nothing
    Ok(expand(u, 0)? == expand(v, 0)?)
}

/// Checks `σ_i − σ_i^{-1} = ε · expand(a_i)` on `strands` classical strands.
pub fn skein_check(i: u32, strands: u32, order: i32) -> Result<bool> {
    if i < 1 || i >= strands {
        return Err(Error::InvalidArgument(format!("σ_{i} is not a generator of B_{strands}")));
    }
    let ambient = Ambient::classical(strands)?;
    let one = TruncatedSeries::one(order);
    let pos = AlgebraElement::from_word(&BraidWord::new(ambient, vec![BraidLetter::sigma(i)])?, one.clone())?;
    let neg = AlgebraElement::from_word(&BraidWord::new(ambient, vec![BraidLetter::sigma_inv(i)])?, one)?;
    let lhs = pos.sub(&neg)?;
    let a = SingularWord::new(ambient, vec![crate::singular::SingularLetter::a(i)])?;
    let rhs = expand(&a, order)?.shift_eps(1);
    Ok(lhs == rhs)
}

/// Checks that `ε^{-1}(σ_j − σ_j^{-1})` is exactly `expand(a_j)` in `Br_n^g`.
pub fn generator_preimage_check(ambient: Ambient, j: u32, order: i32) -> Result<bool> {
    let pos = v_g_map(&BraidWord::new(ambient, vec![BraidLetter::sigma(j)])?, order)?;
    let neg = v_g_map(&BraidWord::new(ambient, vec![BraidLetter::sigma_inv(j)])?, order)?;
    let lhs = pos.sub(&neg)?.shift_eps(-1);
    let a = SingularWord::new(ambient, vec![crate::singular::SingularLetter::a(j)])?;
    Ok(lhs == expand(&a, order)?)
}

/// Coefficient as a rational at a given exponent, for tests and reports.
pub fn coefficient(x: &AlgebraElement, w: &BraidWord, exp: i32) -> Result<Rational> {
    Ok(x.coeff_of(w)?.coeff(exp))
}
