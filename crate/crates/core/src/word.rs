//! Free-group words over indexed generators.
//!
//! A letter is a signed generator index: `+k` stands for generator `k-1`,
//! `-k` for its inverse. Words are kept freely reduced at all times, so
//! equality of `Word` values is equality of reduced words.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<i32>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    /// The one-letter word for generator `index` (0-based).
    pub fn generator(index: usize) -> Self {
        Word {
            letters: vec![index as i32 + 1],
        }
    }

    /// Builds a word from raw signed letters, applying free reduction.
    pub fn from_letters(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut reduced: Vec<i32> = Vec::new();
        for l in letters {
            assert!(l != 0, "letter 0 is not a valid signed generator index");
            if reduced.last() == Some(&-l) {
                reduced.pop();
            } else {
                reduced.push(l);
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

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest 0-based generator index mentioned, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.unsigned_abs() as usize - 1).max()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn mul(&self, other: &Word) -> Word {
        Word::from_letters(self.letters.iter().chain(other.letters.iter()).copied())
    }

    /// `self` conjugated by `c`, i.e. `c^-1 self c`.
    pub fn conjugate(&self, c: &Word) -> Word {
        c.inverse().mul(self).mul(c)
    }

    /// Commutator `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            out.extend_from_slice(&base.letters);
        }
        Word::from_letters(out)
    }

    /// Shifts every generator index up by `offset`. Used to produce the
    /// phi-copy of a word inside nu(G)/chi(G) presentations.
    pub fn shift(&self, offset: usize) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .map(|l| {
                    if *l > 0 {
                        l + offset as i32
                    } else {
                        l - offset as i32
                    }
                })
                .collect(),
        }
    }

    /// Renders the word using the given generator names.
    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut iter = self.word.letters.iter().peekable();
        while let Some(&l) = iter.next() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let idx = l.unsigned_abs() as usize - 1;
            let name: &str = self.names.get(idx).map(|s| s.as_str()).unwrap_or("?");
            // Collapse runs of the same letter into an exponent.
            let mut count: i64 = 1;
            while iter.peek() == Some(&&l) {
                iter.next();
                count += 1;
            }
            let exp = if l > 0 { count } else { -count };
            if exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduction_cancels_adjacent_inverses() {
        let w = Word::from_letters([1, 2, -2, -1, 3]);
        assert_eq!(w.letters(), &[3]);
    }

    #[test]
    fn inverse_round_trip() {
        let w = Word::from_letters([1, 1, -2, 3]);
        assert!(w.mul(&w.inverse()).is_identity());
        assert!(w.inverse().mul(&w).is_identity());
    }

    #[test]
    fn commutator_of_word_with_itself_is_identity() {
        let w = Word::from_letters([1, 2]);
        assert!(Word::commutator(&w, &w).is_identity());
    }

    #[test]
    fn pow_and_shift() {
        let w = Word::generator(0);
        assert_eq!(w.pow(3).letters(), &[1, 1, 1]);
        assert_eq!(w.pow(-2).letters(), &[-1, -1]);
        assert_eq!(w.pow(0), Word::identity());
        assert_eq!(w.shift(4).letters(), &[5]);
        assert_eq!(w.inverse().shift(4).letters(), &[-5]);
    }

    #[test]
    fn display_groups_exponents() {
        let names = vec!["a".to_string(), "b".to_string()];
        let w = Word::from_letters([1, 1, -2, -2, -2]);
        assert_eq!(w.display(&names).to_string(), "a^2 b^-3");
        assert_eq!(Word::identity().display(&names).to_string(), "1");
    }

    proptest! {
        #[test]
        fn reduction_is_idempotent(raw in proptest::collection::vec(-4i32..=4, 0..40)) {
            let letters: Vec<i32> = raw.into_iter().filter(|l| *l != 0).collect();
            let once = Word::from_letters(letters);
            let twice = Word::from_letters(once.letters().to_vec());
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn word_times_inverse_reduces_to_identity(raw in proptest::collection::vec(-4i32..=4, 0..40)) {
            let letters: Vec<i32> = raw.into_iter().filter(|l| *l != 0).collect();
            let w = Word::from_letters(letters);
            prop_assert!(w.mul(&w.inverse()).is_identity());
        }
    }
}
