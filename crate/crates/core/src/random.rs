//! Seeded random words for property checks and harnesses.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::braid::{Ambient, BraidLetter, BraidWord};
use crate::singular::{SingularLetter, SingularWord};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform letter over `σ_i^{±1}` (`i < n`) and `τ_k^{±1}` (`k ≤ g`).
pub fn random_letter<R: Rng>(rng: &mut R, ambient: Ambient) -> Option<BraidLetter> {
    let sigmas = ambient.strands.saturating_sub(1);
    let kinds = sigmas + ambient.genus;
    if kinds == 0 {
        return None;
    }
    let pick = rng.gen_range(0..kinds);
    let letter = if pick < sigmas { BraidLetter::sigma(pick + 1) } else { BraidLetter::tau(pick - sigmas + 1) };
    Some(if rng.gen_bool(0.5) { letter } else { letter.inverse() })
}

/// A word of uniformly chosen length in `0..=max_len`.
pub fn random_word<R: Rng>(rng: &mut R, ambient: Ambient, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).filter_map(|_| random_letter(rng, ambient)).collect();
    BraidWord::new(ambient, letters).expect("generated letters are in range")
}

/// A monoid word with exactly `singular` double points among `extra`
/// ordinary letters.
pub fn random_singular_word<R: Rng>(
    rng: &mut R,
    ambient: Ambient,
    singular: usize,
    extra: usize,
) -> Option<SingularWord> {
    if ambient.strands < 2 && singular > 0 {
        return None;
    }
    let mut letters: Vec<SingularLetter> =
        (0..extra).filter_map(|_| random_letter(rng, ambient)).map(SingularLetter::from).collect();
    for _ in 0..singular {
        let i = rng.gen_range(1..ambient.strands);
        let pos = rng.gen_range(0..=letters.len());
        letters.insert(pos, SingularLetter::a(i));
    }
    SingularWord::new(ambient, letters).ok()
}
