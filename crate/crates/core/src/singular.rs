//! Words in the singular braid monoid `SB_n^g ⊂ SB_{g+n}`.

use std::fmt;

use crate::braid::{tau_expansion, Ambient, BraidLetter, BraidWord, Generator};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SingularGenerator {
    Sigma(u32),
    Tau(u32),
    /// Transverse double point between strands `i` and `i+1`.
    A(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SingularLetter {
    pub generator: SingularGenerator,
    pub exp: i32,
}

impl SingularLetter {
    pub fn sigma(i: u32) -> Self {
        SingularLetter { generator: SingularGenerator::Sigma(i), exp: 1 }
    }

    pub fn sigma_inv(i: u32) -> Self {
        SingularLetter { generator: SingularGenerator::Sigma(i), exp: -1 }
    }

    pub fn tau(k: u32) -> Self {
        SingularLetter { generator: SingularGenerator::Tau(k), exp: 1 }
    }

    pub fn tau_inv(k: u32) -> Self {
        SingularLetter { generator: SingularGenerator::Tau(k), exp: -1 }
    }

    pub fn a(i: u32) -> Self {
        SingularLetter { generator: SingularGenerator::A(i), exp: 1 }
    }

    pub fn is_singular(&self) -> bool {
        matches!(self.generator, SingularGenerator::A(_))
    }

    pub fn is_inverse_of(self, other: SingularLetter) -> bool {
        !self.is_singular() && self.generator == other.generator && self.exp == -other.exp
    }

    fn in_range(self, ambient: Ambient) -> bool {
        match self.generator {
            SingularGenerator::Sigma(i) | SingularGenerator::A(i) => i >= 1 && i < ambient.strands,
            SingularGenerator::Tau(k) => k >= 1 && k <= ambient.genus,
        }
    }
}

impl From<BraidLetter> for SingularLetter {
    fn from(l: BraidLetter) -> Self {
        let generator = match l.generator {
            Generator::Sigma(i) => SingularGenerator::Sigma(i),
            Generator::Tau(k) => SingularGenerator::Tau(k),
        };
        SingularLetter { generator, exp: l.exp as i32 }
    }
}

impl fmt::Display for SingularLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (c, i) = match self.generator {
            SingularGenerator::Sigma(i) => ('s', i),
            SingularGenerator::Tau(k) => ('t', k),
            SingularGenerator::A(i) => ('a', i),
        };
        if self.exp == 1 {
            write!(f, "{c}{i}")
        } else {
            write!(f, "{c}{i}^{}", self.exp)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SingularWord {
    ambient: Ambient,
    letters: Vec<SingularLetter>,
    monoid: bool,
}

impl SingularWord {
    /// A word of the monoid: every `a_i` appears with exponent `+1`.
    pub fn new(ambient: Ambient, letters: Vec<SingularLetter>) -> Result<Self> {
        let w = SingularWord::new_group(ambient, letters)?;
        if let Some((pos, l)) = w.letters.iter().enumerate().find(|(_, l)| l.is_singular() && l.exp != 1) {
            return Err(Error::NotMonoid(format!("letter {pos} is {l}")));
        }
        Ok(SingularWord { monoid: true, ..w })
    }

    /// A word in the singular braid group, where `a_i` may carry any nonzero
    /// exponent. Only [`SingularWord::degree`] and the embedding accept these.
    pub fn new_group(ambient: Ambient, letters: Vec<SingularLetter>) -> Result<Self> {
        for (position, l) in letters.iter().enumerate() {
            let exp_ok = if l.is_singular() { l.exp != 0 } else { l.exp == 1 || l.exp == -1 };
            if !exp_ok {
                return Err(Error::InvalidArgument(format!(
                    "letter {position} has exponent {}",
                    l.exp
                )));
            }
            if !l.in_range(ambient) {
                return Err(Error::IndexOutOfRange {
                    position,
                    letter: l.to_string(),
                    genus: ambient.genus,
                    strands: ambient.strands,
                });
            }
        }
        Ok(SingularWord { ambient, letters, monoid: false })
    }

    /// The inclusion of braid words into singular words.
    pub fn from_braid(w: &BraidWord) -> Self {
        SingularWord {
            ambient: w.ambient(),
            letters: w.letters().iter().map(|&l| l.into()).collect(),
            monoid: true,
        }
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn letters(&self) -> &[SingularLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_monoid(&self) -> bool {
        self.monoid
    }

    pub fn require_monoid(&self) -> Result<()> {
        if !self.monoid {
            return Err(Error::NotMonoid(self.to_string()));
        }
        Ok(())
    }

    pub fn concat(&self, other: &SingularWord) -> Result<SingularWord> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(
                self.ambient.to_string(),
                other.ambient.to_string(),
            ));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(SingularWord { ambient: self.ambient, letters, monoid: self.monoid && other.monoid })
    }

    /// Number of singular letters (double points).
    pub fn singular_count(&self) -> usize {
        self.letters.iter().filter(|l| l.is_singular()).count()
    }

    /// Sum of the exponents of the `a_i` letters.
    pub fn degree(&self) -> i64 {
        self.letters.iter().filter(|l| l.is_singular()).map(|l| l.exp as i64).sum()
    }

    /// Image in `SB_{g+n}`: `σ_i ↦ σ̄_{g+i}`, `a_i ↦ ā_{g+i}`, `τ_k` expanded.
    pub fn embed(&self) -> SingularWord {
        let g = self.ambient.genus;
        let mut letters = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match l.generator {
                SingularGenerator::Sigma(i) => letters.push(SingularLetter { generator: SingularGenerator::Sigma(i + g), exp: l.exp }),
                SingularGenerator::A(i) => letters.push(SingularLetter { generator: SingularGenerator::A(i + g), exp: l.exp }),
                SingularGenerator::Tau(k) => {
                    let tau = tau_expansion(k, g).expect("validated τ index");
                    if l.exp > 0 {
                        letters.extend(tau.into_iter().map(SingularLetter::from));
                    } else {
                        letters.extend(tau.into_iter().rev().map(|t| SingularLetter::from(t.inverse())));
                    }
                }
            }
        }
        SingularWord {
            ambient: Ambient { genus: 0, strands: self.ambient.total_strands() },
            letters,
            monoid: self.monoid,
        }
    }

    /// `h`: deletes every double point.
    pub fn desingularize_h(&self) -> Result<BraidWord> {
        self.require_monoid()?;
        let letters = self.letters.iter().filter_map(|l| braid_letter(*l)).collect();
        BraidWord::new(self.ambient, letters)
    }

    /// `h′`: turns every double point `a_i` into the crossing `σ_i`.
    pub fn desingularize_h_prime(&self) -> Result<BraidWord> {
        self.require_monoid()?;
        let letters = self
            .letters
            .iter()
            .map(|l| match l.generator {
                SingularGenerator::A(i) => BraidLetter::sigma(i),
                _ => braid_letter(*l).expect("non-singular letter"),
            })
            .collect();
        BraidWord::new(self.ambient, letters)
    }

    /// The braid word when the word has no double points.
    pub fn as_braid(&self) -> Option<BraidWord> {
        if self.singular_count() > 0 {
            return None;
        }
        let letters = self.letters.iter().filter_map(|l| braid_letter(*l)).collect();
        BraidWord::new(self.ambient, letters).ok()
    }
}

fn braid_letter(l: SingularLetter) -> Option<BraidLetter> {
    match l.generator {
        SingularGenerator::Sigma(i) => Some(BraidLetter { generator: Generator::Sigma(i), exp: l.exp as i8 }),
        SingularGenerator::Tau(k) => Some(BraidLetter { generator: Generator::Tau(k), exp: l.exp as i8 }),
        SingularGenerator::A(_) => None,
    }
}

impl fmt::Display for SingularWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `τ_i τ_{i+1} ⋯ τ_m`.
pub fn tau_interval(i: u32, m: u32) -> Result<Vec<SingularLetter>> {
    if i < 1 || i > m {
        return Err(Error::InvalidArgument(format!("τ_{{{i},{m}}} needs 1 ≤ i ≤ m")));
    }
    Ok((i..=m).map(SingularLetter::tau).collect())
}
