//! Freely reduced words over an indexed alphabet.
//!
//! Letter `+i` is generator `i` (1-based), `-i` its inverse. Every `Word` is
//! kept in freely reduced form; reduction happens at construction boundaries,
//! so downstream code may assume no adjacent `x x^-1` pairs.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("letter {0} has no image under the remap")]
    UndefinedLetter(i32),
    #[error("engel depth must be at least 1")]
    ZeroEngelDepth,
}

/// A freely reduced word. Immutable value; all operations return new words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<i32>,
}

impl Word {
    pub fn identity() -> Self {
        Word { letters: Vec::new() }
    }

    /// Single positive generator letter.
    pub fn generator(index: usize) -> Self {
        assert!(index >= 1, "generator indices are 1-based");
        Word { letters: vec![index as i32] }
    }

    /// Builds a word from raw letters, freely reducing. Zero letters are invalid.
    pub fn from_letters(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut reduced: Vec<i32> = Vec::new();
        for letter in letters {
            assert!(letter != 0, "letter 0 is not a generator");
            if reduced.last() == Some(&-letter) {
                reduced.pop();
            } else {
                reduced.push(letter);
            }
        }
        Word { letters: reduced }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest absolute letter value, or 0 for the empty word.
    pub fn max_letter(&self) -> usize {
        self.letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::from_letters(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn inverse(&self) -> Word {
        // Reduced words stay reduced under reversal + negation.
        Word { letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn pow(&self, exponent: i32) -> Word {
        let base = if exponent < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * exponent.unsigned_abs() as usize);
        for _ in 0..exponent.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Word::from_letters(letters)
    }

    /// `[u, v] = u^-1 v^-1 u v`, freely reduced.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        Word::from_letters(
            u.inverse()
                .letters
                .iter()
                .chain(v.inverse().letters.iter())
                .chain(u.letters.iter())
                .chain(v.letters.iter())
                .copied(),
        )
    }

    /// `u^t = t^-1 u t`, freely reduced.
    pub fn conjugated_by(&self, t: &Word) -> Word {
        Word::from_letters(
            t.inverse()
                .letters
                .iter()
                .chain(self.letters.iter())
                .chain(t.letters.iter())
                .copied(),
        )
    }

    /// Left-normed iterated commutator `[x, g, g, ..., g]` with `n` copies of `g`.
    pub fn engel(x: &Word, g: &Word, n: u32) -> Result<Word, WordError> {
        if n == 0 {
            return Err(WordError::ZeroEngelDepth);
        }
        let mut acc = Word::commutator(x, g);
        for _ in 1..n {
            acc = Word::commutator(&acc, g);
        }
        Ok(acc)
    }

    /// Substitutes `images[i-1]` for letter `i` (inverted images for negative
    /// letters), then reduces. Letters without an image are an error.
    pub fn remap(&self, images: &[Word]) -> Result<Word, WordError> {
        let mut letters = Vec::new();
        for &letter in &self.letters {
            let index = letter.unsigned_abs() as usize;
            let image = images.get(index - 1).ok_or(WordError::UndefinedLetter(letter))?;
            if letter > 0 {
                letters.extend_from_slice(&image.letters);
            } else {
                letters.extend(image.letters.iter().rev().map(|l| -l));
            }
        }
        Ok(Word::from_letters(letters))
    }

    /// Shifts every letter by `offset` generators: `±i ↦ ±(i+offset)`.
    /// Realizes an isomorphism onto a disjoint copy of the alphabet.
    pub fn shifted(&self, offset: usize) -> Word {
        let offset = offset as i32;
        Word {
            letters: self
                .letters
                .iter()
                .map(|&l| if l > 0 { l + offset } else { l - offset })
                .collect(),
        }
    }

    /// Canonical representative of the cyclic-rotation-and-inversion class:
    /// cyclically reduces, then picks the least rotation of the word and of
    /// its inverse. Two relators with equal canonical forms have the same
    /// normal closure.
    pub fn cyclic_canonical(&self) -> Word {
        let mut letters = self.letters.clone();
        // strip matching first/last inverse pairs
        while letters.len() >= 2 && letters[0] == -letters[letters.len() - 1] {
            letters.pop();
            letters.remove(0);
        }
        if letters.is_empty() {
            return Word::identity();
        }
        let best_rotation = |v: &[i32]| -> Vec<i32> {
            let n = v.len();
            let mut best: Option<Vec<i32>> = None;
            for start in 0..n {
                let mut rot = Vec::with_capacity(n);
                rot.extend_from_slice(&v[start..]);
                rot.extend_from_slice(&v[..start]);
                if best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot);
                }
            }
            best.unwrap()
        };
        let fwd = best_rotation(&letters);
        let inv: Vec<i32> = letters.iter().rev().map(|l| -l).collect();
        let bwd = best_rotation(&inv);
        Word { letters: if fwd <= bwd { fwd } else { bwd } }
    }
}

/// Reduces arbitrary letter sequences; exposed as the module-level entry
/// point besides `Word::from_letters`.
pub fn free_reduce(letters: &[i32]) -> Word {
    Word::from_letters(letters.iter().copied())
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(letters: &[i32]) -> Word {
        Word::from_letters(letters.iter().copied())
    }

    #[test]
    fn reduce_cancels_adjacent_pairs() {
        assert_eq!(w(&[1, -1, 2]).letters(), &[2]);
        assert_eq!(w(&[]).letters(), &[] as &[i32]);
        assert_eq!(w(&[1, 2, -2, -1, 1]).letters(), &[1]);
    }

    #[test]
    fn invert_reverses_and_negates() {
        assert_eq!(w(&[1, 2]).inverse().letters(), &[-2, -1]);
        assert_eq!(w(&[]).inverse().letters(), &[] as &[i32]);
        assert_eq!(w(&[1, -2]).inverse().letters(), &[2, -1]);
    }

    #[test]
    fn commutator_definition() {
        assert_eq!(Word::commutator(&w(&[1]), &w(&[2])).letters(), &[-1, -2, 1, 2]);
        assert!(Word::commutator(&w(&[1]), &w(&[1])).is_empty());
        assert!(Word::commutator(&w(&[1]), &w(&[])).is_empty());
    }

    #[test]
    fn conjugation_definition() {
        assert_eq!(w(&[1]).conjugated_by(&w(&[])).letters(), &[1]);
        assert!(w(&[]).conjugated_by(&w(&[2])).is_empty());
        assert_eq!(w(&[1]).conjugated_by(&w(&[2])).letters(), &[-2, 1, 2]);
    }

    #[test]
    fn engel_words() {
        let x = w(&[1]);
        let g = w(&[2]);
        assert_eq!(Word::engel(&x, &g, 1).unwrap(), Word::commutator(&x, &g));
        let once = Word::commutator(&x, &g);
        assert_eq!(Word::engel(&x, &g, 2).unwrap(), Word::commutator(&once, &g));
        assert!(Word::engel(&g, &g, 1).unwrap().is_empty());
        assert_eq!(Word::engel(&x, &g, 0), Err(WordError::ZeroEngelDepth));
    }

    #[test]
    fn remap_shift_and_images() {
        let images: Vec<Word> = vec![w(&[3]), w(&[4])];
        assert_eq!(w(&[1]).remap(&images).unwrap().letters(), &[3]);
        let identity: Vec<Word> = vec![w(&[1]), w(&[2])];
        assert_eq!(w(&[1, -2]).remap(&identity).unwrap(), w(&[1, -2]));
        let doubling = vec![w(&[2, 2])];
        assert_eq!(w(&[-1]).remap(&doubling).unwrap().letters(), &[-2, -2]);
        assert_eq!(w(&[1, 2, 3]).remap(&images), Err(WordError::UndefinedLetter(3)));
    }

    #[test]
    fn shift_matches_remap_by_shifted_generators() {
        let word = w(&[1, -2, 1]);
        let images: Vec<Word> = (1..=2).map(|i| Word::generator(i + 3)).collect();
        assert_eq!(word.shifted(3), word.remap(&images).unwrap());
    }

    #[test]
    fn cyclic_canonical_strips_conjugation() {
        let base = w(&[1, 2, -1, -2]);
        let conj = base.conjugated_by(&w(&[2, 1, 1]));
        assert_eq!(base.cyclic_canonical(), conj.cyclic_canonical());
        assert_eq!(base.cyclic_canonical(), base.inverse().cyclic_canonical());
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec((1i32..=4, prop::bool::ANY), 0..12).prop_map(|raw| {
            Word::from_letters(raw.into_iter().map(|(i, neg)| if neg { -i } else { i }))
        })
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent_and_nonincreasing(raw in prop::collection::vec((1i32..=4, prop::bool::ANY), 0..16)) {
            let letters: Vec<i32> = raw.into_iter().map(|(i, neg)| if neg { -i } else { i }).collect();
            let reduced = free_reduce(&letters);
            prop_assert!(reduced.len() <= letters.len());
            prop_assert_eq!(free_reduce(reduced.letters()), reduced);
        }

        #[test]
        fn word_times_inverse_is_identity(word in arb_word()) {
            prop_assert!(word.concat(&word.inverse()).is_empty());
        }

        #[test]
        fn self_commutator_is_identity(word in arb_word()) {
            prop_assert!(Word::commutator(&word, &word).is_empty());
        }

        #[test]
        fn remap_respects_composition(word in arb_word()) {
            // f: i -> i+4 shift, g on the shifted alphabet: i -> reversed pair
            let f: Vec<Word> = (1..=4).map(|i| Word::generator(i + 4)).collect();
            let g: Vec<Word> = (1..=8)
                .map(|i| if i > 4 { Word::from_letters([i as i32 - 4, -(i as i32)]) } else { Word::generator(i) })
                .collect();
            let composed: Vec<Word> = f.iter().map(|img| img.remap(&g).unwrap()).collect();
            let two_step = word.remap(&f).unwrap().remap(&g).unwrap();
            let one_step = word.remap(&composed).unwrap();
            prop_assert_eq!(two_step, one_step);
        }
    }
}
