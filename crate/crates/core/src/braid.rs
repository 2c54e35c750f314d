//! Words in the handlebody braid group `Br_n^g` and the classical braid group.
//!
//! A handlebody word keeps its `τ_k` letters abstract. Mapping into the
//! classical group on `g + n` strands sends `σ_i ↦ σ̄_{g+i}` and `τ_k` to the
//! conjugated square `σ̄_g ⋯ σ̄_{k+1} σ̄_k² σ̄_{k+1}^{-1} ⋯ σ̄_g^{-1}`.
//! A classical word is a handlebody word of genus 0.

use std::fmt;

use crate::error::{Error, Result};
use crate::free_group::{ArtinSignature, DEFAULT_IMAGE_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Sigma(u32),
    Tau(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidLetter {
    pub generator: Generator,
    /// `+1` or `-1`.
    pub exp: i8,
}

impl BraidLetter {
    pub fn sigma(i: u32) -> Self {
        BraidLetter { generator: Generator::Sigma(i), exp: 1 }
    }

    pub fn sigma_inv(i: u32) -> Self {
        BraidLetter { generator: Generator::Sigma(i), exp: -1 }
    }

    pub fn tau(k: u32) -> Self {
        BraidLetter { generator: Generator::Tau(k), exp: 1 }
    }

    pub fn tau_inv(k: u32) -> Self {
        BraidLetter { generator: Generator::Tau(k), exp: -1 }
    }

    pub fn inverse(self) -> Self {
        BraidLetter { exp: -self.exp, ..self }
    }

    pub fn is_inverse_of(self, other: BraidLetter) -> bool {
        self.generator == other.generator && self.exp == -other.exp
    }

    fn in_range(self, ambient: Ambient) -> bool {
        match self.generator {
            Generator::Sigma(i) => i >= 1 && i < ambient.strands,
            Generator::Tau(k) => k >= 1 && k <= ambient.genus,
        }
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (c, i) = match self.generator {
            Generator::Sigma(i) => ('s', i),
            Generator::Tau(k) => ('t', k),
        };
        if self.exp < 0 {
            write!(f, "{c}{i}^-1")
        } else {
            write!(f, "{c}{i}")
        }
    }
}

/// Genus `g` of the handlebody and number `n` of moving strands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ambient {
    pub genus: u32,
    pub strands: u32,
}

impl Ambient {
    pub fn new(genus: u32, strands: u32) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidArgument("a braid needs at least one strand".into()));
        }
        Ok(Ambient { genus, strands })
    }

    pub fn classical(strands: u32) -> Result<Self> {
        Ambient::new(0, strands)
    }

    /// Strand count of the classical group the handlebody group sits in.
    pub fn total_strands(&self) -> u32 {
        self.genus + self.strands
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(g={}, n={})", self.genus, self.strands)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    ambient: Ambient,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    /// Validates the letters against the ambient index bounds.
    pub fn new(ambient: Ambient, letters: Vec<BraidLetter>) -> Result<Self> {
        for (position, l) in letters.iter().enumerate() {
            if l.exp != 1 && l.exp != -1 {
                return Err(Error::InvalidArgument(format!(
                    "letter {position} has exponent {}; braid letters carry ±1",
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
        Ok(BraidWord { ambient, letters })
    }

    pub fn identity(ambient: Ambient) -> Self {
        BraidWord { ambient, letters: Vec::new() }
    }

    /// A classical word from signed generator indices, e.g. `[1, 1, -2]`.
    pub fn classical(strands: u32, gens: &[i32]) -> Result<Self> {
        let letters = gens
            .iter()
            .map(|&s| {
                if s == 0 {
                    return Err(Error::InvalidArgument("generator index 0".into()));
                }
                let i = s.unsigned_abs();
                Ok(if s > 0 { BraidLetter::sigma(i) } else { BraidLetter::sigma_inv(i) })
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(Ambient::classical(strands)?, letters)
    }

    /// Re-checks the index bounds; returns the word unchanged when they hold.
    pub fn validate(self) -> Result<Self> {
        BraidWord::new(self.ambient, self.letters)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn genus(&self) -> u32 {
        self.ambient.genus
    }

    pub fn strands(&self) -> u32 {
        self.ambient.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_classical(&self) -> bool {
        self.ambient.genus == 0
    }

    /// Cancels adjacent letter/inverse pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<BraidLetter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(&last) if last.is_inverse_of(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        BraidWord { ambient: self.ambient, letters: out }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            ambient: self.ambient,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_same_ambient(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { ambient: self.ambient, letters })
    }

    pub fn check_same_ambient(&self, other: &BraidWord) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(
                self.ambient.to_string(),
                other.ambient.to_string(),
            ));
        }
        Ok(())
    }

    /// The same letters viewed with more moving strands (the canonical
    /// inclusion `Br_n^g ⊂ Br_{n'}^g`).
    pub fn with_strands(&self, strands: u32) -> Result<BraidWord> {
        BraidWord::new(Ambient::new(self.ambient.genus, strands)?, self.letters.clone())
    }

    /// Image in the classical group on `g + n` strands.
    pub fn embed(&self) -> BraidWord {
        let g = self.ambient.genus;
        let mut letters = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match l.generator {
                Generator::Sigma(i) => letters.push(BraidLetter { generator: Generator::Sigma(i + g), exp: l.exp }),
                Generator::Tau(k) => {
                    let tau = tau_expansion(k, g).expect("validated τ index");
                    if l.exp > 0 {
                        letters.extend(tau);
                    } else {
                        letters.extend(tau.into_iter().rev().map(BraidLetter::inverse));
                    }
                }
            }
        }
        BraidWord {
            ambient: Ambient { genus: 0, strands: self.ambient.total_strands() },
            letters,
        }
    }

    /// `(index, exponent)` pairs of the classical image.
    pub fn classical_generators(&self) -> Vec<(u32, i8)> {
        self.embed()
            .letters
            .iter()
            .map(|l| match l.generator {
                Generator::Sigma(i) => (i, l.exp),
                Generator::Tau(_) => unreachable!("embedded words are classical"),
            })
            .collect()
    }

    pub fn artin_signature(&self) -> Result<ArtinSignature> {
        self.artin_signature_with_limit(DEFAULT_IMAGE_LIMIT)
    }

    pub fn artin_signature_with_limit(&self, limit: usize) -> Result<ArtinSignature> {
        ArtinSignature::from_generators(
            self.ambient.total_strands(),
            self.classical_generators(),
            limit,
        )
    }

    /// Decides equality in `Br_n^g` through the Artin action on `F_{g+n}`.
    pub fn equals(&self, other: &BraidWord) -> Result<bool> {
        self.check_same_ambient(other)?;
        if self.free_reduce().letters == other.free_reduce().letters {
            return Ok(true);
        }
        Ok(self.artin_signature()? == other.artin_signature()?)
    }

    /// Exponent sum of the classical image; `τ_k^{±1}` contributes `±2`.
    pub fn writhe(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| match l.generator {
                Generator::Sigma(_) => l.exp as i64,
                Generator::Tau(_) => 2 * l.exp as i64,
            })
            .sum()
    }

    /// Permutation of the moving strands: `perm[p]` is where the strand
    /// starting at position `p` ends. `τ` letters are pure.
    pub fn permutation(&self) -> Vec<u32> {
        let n = self.ambient.strands as usize;
        // pos[s] = current position of strand s
        let mut at: Vec<usize> = (0..n).collect();
        for l in &self.letters {
            if let Generator::Sigma(i) = l.generator {
                at.swap(i as usize - 1, i as usize);
            }
        }
        let mut perm = vec![0u32; n];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos as u32;
        }
        perm
    }

    /// Components of the closure: cycles of the moving permutation plus one
    /// per handle strand.
    pub fn closure_components(&self) -> u32 {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = perm[p] as usize;
            }
        }
        cycles + self.ambient.genus
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Classical letters of `τ_k` inside `Br_{g+n}`.
pub fn tau_expansion(k: u32, genus: u32) -> Result<Vec<BraidLetter>> {
    if k < 1 || k > genus {
        return Err(Error::InvalidArgument(format!("τ_{k} needs 1 ≤ k ≤ g = {genus}")));
    }
    let mut letters = Vec::with_capacity(2 * (genus - k) as usize + 2);
    letters.extend((k + 1..=genus).rev().map(BraidLetter::sigma));
    letters.push(BraidLetter::sigma(k));
    letters.push(BraidLetter::sigma(k));
    letters.extend((k + 1..=genus).map(BraidLetter::sigma_inv));
    Ok(letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hb(g: u32, n: u32, letters: Vec<BraidLetter>) -> Result<BraidWord> {
        BraidWord::new(Ambient::new(g, n).unwrap(), letters)
    }

    use BraidLetter as L;

    #[test]
    fn validate_bounds() {
        assert!(hb(1, 2, vec![L::sigma(1)]).is_ok());
        assert!(matches!(hb(1, 2, vec![L::sigma(2)]), Err(Error::IndexOutOfRange { position: 0, .. })));
        assert!(matches!(hb(0, 3, vec![L::tau(1)]), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(
            hb(2, 3, vec![L::sigma(1), L::tau(3)]),
            Err(Error::IndexOutOfRange { position: 1, .. })
        ));
    }

    #[test]
    fn free_reduce_examples() {
        let w = hb(0, 2, vec![L::sigma(1), L::sigma_inv(1)]).unwrap();
        assert!(w.free_reduce().is_empty());
        let w = hb(1, 3, vec![L::tau(1), L::sigma(2), L::sigma_inv(2), L::tau_inv(1)]).unwrap();
        assert!(w.free_reduce().is_empty());
        let w = hb(0, 3, vec![L::sigma(1), L::sigma(2)]).unwrap();
        assert_eq!(w.free_reduce(), w);
    }

    #[test]
    fn inverse_examples() {
        let w = hb(1, 2, vec![]).unwrap();
        assert!(w.inverse().is_empty());
        let w = hb(1, 2, vec![L::sigma(1)]).unwrap();
        assert_eq!(w.inverse().letters(), &[L::sigma_inv(1)]);
        let w = hb(1, 2, vec![L::tau(1), L::sigma_inv(1)]).unwrap();
        assert_eq!(w.inverse().letters(), &[L::sigma(1), L::tau_inv(1)]);
        assert!(w.concat(&w.inverse()).unwrap().free_reduce().is_empty());
    }

    #[test]
    fn tau_expansion_examples() {
        assert_eq!(tau_expansion(1, 1).unwrap(), vec![L::sigma(1), L::sigma(1)]);
        assert_eq!(tau_expansion(2, 2).unwrap(), vec![L::sigma(2), L::sigma(2)]);
        assert_eq!(
            tau_expansion(1, 2).unwrap(),
            vec![L::sigma(2), L::sigma(1), L::sigma(1), L::sigma_inv(2)]
        );
        assert_eq!(
            tau_expansion(1, 3).unwrap(),
            vec![L::sigma(3), L::sigma(2), L::sigma(1), L::sigma(1), L::sigma_inv(2), L::sigma_inv(3)]
        );
        assert!(tau_expansion(0, 2).is_err());
        assert!(tau_expansion(3, 2).is_err());
    }

    #[test]
    fn embed_examples() {
        let e = hb(1, 2, vec![L::sigma(1)]).unwrap().embed();
        assert_eq!(e.letters(), &[L::sigma(2)]);
        assert_eq!(e.ambient(), Ambient { genus: 0, strands: 3 });
        let e = hb(1, 2, vec![L::tau(1)]).unwrap().embed();
        assert_eq!(e.letters(), &[L::sigma(1), L::sigma(1)]);
        let w = hb(0, 3, vec![L::sigma(1), L::sigma(2)]).unwrap();
        assert_eq!(w.embed(), w);
        let e = hb(2, 1, vec![L::tau_inv(1)]).unwrap().embed();
        assert_eq!(
            e.letters(),
            &[L::sigma(2), L::sigma_inv(1), L::sigma_inv(1), L::sigma_inv(2)]
        );
    }

    #[test]
    fn signature_examples() {
        let e = BraidWord::classical(2, &[]).unwrap().artin_signature().unwrap();
        assert!(e.is_identity());
        let s = BraidWord::classical(2, &[1]).unwrap().artin_signature().unwrap();
        assert_eq!(s.images()[0].letters(), &[1, 2, -1]);
        assert_eq!(s.images()[1].letters(), &[1]);
    }

    #[test]
    fn equality_examples() {
        let u = BraidWord::classical(3, &[1, 2, 1]).unwrap();
        let v = BraidWord::classical(3, &[2, 1, 2]).unwrap();
        assert!(u.equals(&v).unwrap());
        let u = hb(1, 2, vec![L::tau(1), L::sigma(1), L::tau(1), L::sigma(1)]).unwrap();
        let v = hb(1, 2, vec![L::sigma(1), L::tau(1), L::sigma(1), L::tau(1)]).unwrap();
        assert!(u.equals(&v).unwrap());
        let u = BraidWord::classical(2, &[1]).unwrap();
        let v = BraidWord::classical(2, &[-1]).unwrap();
        assert!(!u.equals(&v).unwrap());
        let w = hb(1, 2, vec![]).unwrap();
        assert!(matches!(u.equals(&w), Err(Error::AmbientMismatch(..))));
    }

    #[test]
    fn writhe_examples() {
        assert_eq!(hb(0, 2, vec![]).unwrap().writhe(), 0);
        assert_eq!(BraidWord::classical(2, &[1, 1, 1]).unwrap().writhe(), 3);
        let t = hb(1, 1, vec![L::tau(1)]).unwrap();
        assert_eq!(t.writhe(), 2);
        assert_eq!(t.embed().writhe(), 2);
    }

    #[test]
    fn components_examples() {
        assert_eq!(BraidWord::classical(2, &[1]).unwrap().closure_components(), 1);
        assert_eq!(BraidWord::classical(3, &[]).unwrap().closure_components(), 3);
        assert_eq!(hb(2, 2, vec![L::sigma(1)]).unwrap().closure_components(), 3);
        // handle strands stay fixed under the embedding
        let w = hb(2, 3, vec![L::tau(1), L::sigma(2), L::tau(2)]).unwrap();
        assert_eq!(w.closure_components(), w.embed().closure_components());
    }
}
