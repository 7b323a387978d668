use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn bit(self) -> u64 {
        match self {
            Letter::X => 0,
            Letter::Y => 1,
        }
    }

    pub fn from_bit(bit: u64) -> Self {
        if bit & 1 == 0 {
            Letter::X
        } else {
            Letter::Y
        }
    }

    pub fn other(self) -> Self {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

/// A word over `{x, y}` packed into the low `len` bits of a `u64`.
///
/// The first letter sits in the most significant of those bits, so for
/// words of equal length numeric order on `bits` is lexicographic order
/// (`x < y`). The derived ordering compares length first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    len: u8,
    bits: u64,
}

impl Word {
    pub const MAX_LEN: usize = 64;

    pub const fn empty() -> Self {
        Word { len: 0, bits: 0 }
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Result<Self> {
        let mut word = Word::empty();
        for letter in letters {
            word = word.try_push(letter)?;
        }
        Ok(word)
    }

    /// Builds a word from its packed representation. Bits above `len` are
    /// discarded.
    pub fn from_bits(bits: u64, len: usize) -> Self {
        assert!(len <= Self::MAX_LEN, "word length {len} exceeds {}", Self::MAX_LEN);
        Word {
            len: len as u8,
            bits: bits & mask(len),
        }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Letter at 0-based position `i`.
    pub fn letter(&self, i: usize) -> Letter {
        assert!(i < self.len(), "index {i} out of range for word of length {}", self.len);
        Letter::from_bit(self.bits >> (self.len() - 1 - i))
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len()).map(move |i| self.letter(i))
    }

    pub fn count(&self, letter: Letter) -> usize {
        let ones = self.bits.count_ones() as usize;
        match letter {
            Letter::Y => ones,
            Letter::X => self.len() - ones,
        }
    }

    pub fn try_push(self, letter: Letter) -> Result<Self> {
        if self.len() == Self::MAX_LEN {
            return Err(Error::WordTooLong {
                len: self.len() + 1,
                max: Self::MAX_LEN,
            });
        }
        Ok(Word {
            len: self.len + 1,
            bits: (self.bits << 1) | letter.bit(),
        })
    }

    pub fn push(self, letter: Letter) -> Self {
        self.try_push(letter).expect("word length overflow")
    }

    pub fn last(&self) -> Option<Letter> {
        (!self.is_empty()).then(|| Letter::from_bit(self.bits))
    }

    /// The word with its last letter removed.
    pub fn init(&self) -> Word {
        assert!(!self.is_empty(), "init of the empty word");
        Word {
            len: self.len - 1,
            bits: self.bits >> 1,
        }
    }

    /// Even in the sense of `z_1^2 ... z_n^2` with as many x's as y's.
    pub fn is_even(&self) -> bool {
        self.len().is_multiple_of(2)
            && (0..self.len() / 2).all(|p| self.letter(2 * p) == self.letter(2 * p + 1))
            && self.count(Letter::X) == self.count(Letter::Y)
    }

    /// Words of the form `z_1^2 ... z_n^2` (no balance condition).
    pub fn is_doubled(&self) -> bool {
        self.len().is_multiple_of(2)
            && (0..self.len() / 2).all(|p| self.letter(2 * p) == self.letter(2 * p + 1))
    }

    /// All words of length `len` in lexicographic order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = Word> {
        assert!(len < Self::MAX_LEN, "cannot enumerate words of length {len}");
        (0..1u64 << len).map(move |bits| Word::from_bits(bits, len))
    }

    /// All even words with `pairs` letter-pairs, in lexicographic order.
    pub fn even_words(pairs: usize) -> impl Iterator<Item = Word> {
        assert!(pairs < 32, "cannot enumerate even words with {pairs} pairs");
        (0..1u64 << pairs)
            .filter(move |pattern| pattern.count_ones() as usize * 2 == pairs)
            .map(move |pattern| {
                let mut word = Word::empty();
                for p in (0..pairs).rev() {
                    let letter = Letter::from_bit(pattern >> p);
                    word = word.push(letter).push(letter);
                }
                word
            })
    }
}

/// Juxtaposition `u·v`.
pub fn concat(u: Word, v: Word) -> Word {
    let len = u.len() + v.len();
    assert!(len <= Word::MAX_LEN, "concatenated word length {len} exceeds {}", Word::MAX_LEN);
    Word {
        len: len as u8,
        bits: shl(u.bits, v.len()) | v.bits,
    }
}

fn shl(bits: u64, by: usize) -> u64 {
    if by >= 64 {
        0
    } else {
        bits << by
    }
}

fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for letter in self.letters() {
            write!(f, "{}", letter.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "ε")
        } else {
            write!(f, "{self}")
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|c| match c {
                'x' => Ok(Letter::X),
                'y' => Ok(Letter::Y),
                other => Err(Error::InvalidLetter(other)),
            })
            .collect::<Result<Vec<_>>>()?;
        if letters.len() > Word::MAX_LEN {
            return Err(Error::WordTooLong {
                len: letters.len(),
                max: Word::MAX_LEN,
            });
        }
        Word::from_letters(letters)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
