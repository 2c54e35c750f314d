//! Free groups and the Artin action of the braid group on them.
//!
//! Braid `σ_i` acts on the free group `F_m = <x_1, …, x_m>` by
//! `x_i ↦ x_i x_{i+1} x_i^{-1}`, `x_{i+1} ↦ x_i`, fixing the other generators.
//! This convention is used everywhere in the crate. The action is faithful, so
//! the tuple of images of the generators is a complete invariant of a braid.

use std::fmt;

use crate::error::{Error, Result};

/// Default bound on the total number of letters across all images.
pub const DEFAULT_IMAGE_LIMIT: usize = 1_000_000;

/// A freely reduced word in the free group. Letter `j` stands for `x_j`,
/// `-j` for `x_j^{-1}`; indices are 1-based.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    pub fn generator(j: i32) -> Self {
        assert!(j != 0, "free generator index must be nonzero");
        FreeWord(vec![j])
    }

    /// Builds a word from raw letters, reducing as it goes.
    pub fn from_letters<I: IntoIterator<Item = i32>>(letters: I) -> Self {
        let mut w = FreeWord::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Appends one letter, cancelling against the tail if possible.
    pub fn push(&mut self, l: i32) {
        debug_assert!(l != 0);
        if self.0.last() == Some(&-l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn append(&mut self, other: &FreeWord) {
        for &l in &other.0 {
            self.push(l);
        }
    }

    pub fn append_inverse(&mut self, other: &FreeWord) {
        for &l in other.0.iter().rev() {
            self.push(-l);
        }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| -l).collect())
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|p| p[0] != -p[1]) && !self.0.contains(&0)
    }

    /// Replaces every `x_j` with `images[j-1]`.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let mut out = FreeWord::identity();
        for &l in &self.0 {
            let img = &images[(l.unsigned_abs() - 1) as usize];
            if l > 0 {
                out.append(img);
            } else {
                out.append_inverse(img);
            }
        }
        out
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&l| {
                if l > 0 {
                    format!("x{l}")
                } else {
                    format!("x{}^-1", -l)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Images of `x_1, …, x_m` under the automorphism induced by a classical braid.
///
/// For a braid word `w = l_1 ⋯ l_k` the automorphism is `φ_w = φ_{l_1} ∘ ⋯ ∘ φ_{l_k}`,
/// so the images of `u·v` are the images of `v` with the images of `u`
/// substituted for the generators (see [`ArtinSignature::then`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArtinSignature {
    strands: u32,
    images: Vec<FreeWord>,
}

impl ArtinSignature {
    pub fn identity(strands: u32) -> Self {
        ArtinSignature {
            strands,
            images: (1..=strands as i32).map(FreeWord::generator).collect(),
        }
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn total_len(&self) -> usize {
        self.images.iter().map(FreeWord::len).sum()
    }

    pub fn is_identity(&self) -> bool {
        *self == ArtinSignature::identity(self.strands)
    }

    /// Right-multiplies the underlying braid by `σ_i^{exp}`.
    pub fn push_generator(&mut self, i: u32, exp: i8) {
        assert!(i >= 1 && i < self.strands, "generator σ_{i} outside B_{}", self.strands);
        let a = (i - 1) as usize;
        let b = i as usize;
        let old_a = self.images[a].clone();
        let old_b = self.images[b].clone();
        if exp > 0 {
            // x_i ↦ x_i x_{i+1} x_i^{-1}, x_{i+1} ↦ x_i
            let mut new_a = old_a.clone();
            new_a.append(&old_b);
            new_a.append_inverse(&old_a);
            self.images[a] = new_a;
            self.images[b] = old_a;
        } else {
            // x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}^{-1} x_i x_{i+1}
            let mut new_b = old_b.inverse();
            new_b.append(&old_a);
            new_b.append(&old_b);
            self.images[a] = old_b;
            self.images[b] = new_b;
        }
    }

    /// Signature of a sequence of `(index, exponent)` generators on `strands` strands.
    pub fn from_generators<I>(strands: u32, gens: I, limit: usize) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, i8)>,
    {
        let mut sig = ArtinSignature::identity(strands);
        for (i, e) in gens {
            sig.push_generator(i, e);
            if sig.total_len() > limit {
                return Err(Error::Resource(format!(
                    "Artin images exceed {limit} letters"
                )));
            }
        }
        Ok(sig)
    }

    /// Signature of `u·v` where `self` belongs to `u` and `next` to `v`.
    pub fn then(&self, next: &ArtinSignature) -> ArtinSignature {
        assert_eq!(self.strands, next.strands);
        ArtinSignature {
            strands: self.strands,
            images: next.images.iter().map(|w| w.substitute(&self.images)).collect(),
        }
    }
}

impl fmt::Display for ArtinSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|w| format!("({w})")).collect();
        write!(f, "{}", parts.join(", "))
    }
}
