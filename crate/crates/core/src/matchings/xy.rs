use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::perm;
use crate::error::{Error, Result};
use crate::shuffle_algebra::rational::factorial;
use crate::shuffle_algebra::{Letter, Word};

/// A word together with a fixed-point-free involution pairing every
/// x-position with a y-position.
///
/// Only balance is required of the word (every x needs a y partner); the
/// coefficient functions additionally insist on even words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XyMatching {
    word: Word,
    sigma: Vec<usize>,
}

impl XyMatching {
    /// `sigma` is 0-indexed.
    pub fn new(word: Word, sigma: Vec<usize>) -> Result<Self> {
        if sigma.len() != word.len() {
            return Err(Error::InvalidMatching(format!(
                "permutation has {} points, word has {} letters",
                sigma.len(),
                word.len()
            )));
        }
        if !perm::is_fixed_point_free_involution(&sigma) {
            return Err(Error::InvalidMatching(format!(
                "{} is not a fixed-point-free involution",
                perm::cycle_notation(&sigma)
            )));
        }
        if let Some(i) = (0..word.len()).find(|&i| word.letter(i) == word.letter(sigma[i])) {
            return Err(Error::InvalidMatching(format!(
                "positions {} and {} carry the same letter",
                i + 1,
                sigma[i] + 1
            )));
        }
        Ok(XyMatching { word, sigma })
    }

    /// Parses a word and 1-indexed transpositions, e.g.
    /// `("xxyyxxyy", &[&[1, 3], &[2, 8], &[4, 6], &[5, 7]])`.
    pub fn from_cycles(word: &str, transpositions: &[&[usize]]) -> Result<Self> {
        let word: Word = word.parse()?;
        let sigma = perm::from_cycles(word.len(), transpositions)?;
        XyMatching::new(word, sigma)
    }

    pub fn word(&self) -> Word {
        self.word
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    /// Number of x's whose partner lies to their left.
    pub fn negativity(&self) -> usize {
        (0..self.word.len())
            .filter(|&i| self.word.letter(i) == Letter::X && self.sigma[i] < i)
            .count()
    }

    pub fn sign(&self) -> i32 {
        if self.negativity().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Debug for XyMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.word, perm::cycle_notation(&self.sigma))
    }
}

#[derive(Serialize, Deserialize)]
struct MatchingJson {
    word: String,
    sigma: Vec<usize>,
}

impl Serialize for XyMatching {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatchingJson {
            word: self.word.to_string(),
            sigma: perm::to_one_indexed(&self.sigma),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for XyMatching {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = MatchingJson::deserialize(deserializer)?;
        let word: Word = raw.word.parse().map_err(D::Error::custom)?;
        let sigma = perm::from_one_indexed(&raw.sigma).map_err(D::Error::custom)?;
        XyMatching::new(word, sigma).map_err(D::Error::custom)
    }
}

fn require_even(w: Word) -> Result<()> {
    if w.is_even() {
        Ok(())
    } else {
        Err(Error::NotEvenWord(w.to_string()))
    }
}

fn require_balanced(w: Word) -> Result<()> {
    if w.count(Letter::X) == w.count(Letter::Y) {
        Ok(())
    } else {
        Err(Error::InvalidMatching(format!("{w} has unequal letter counts")))
    }
}

fn positions(w: Word, letter: Letter) -> Vec<usize> {
    (0..w.len()).filter(|&i| w.letter(i) == letter).collect()
}

/// Every xy-matching with underlying word `w`: one per bijection from
/// x-positions to y-positions, so `(#x)!` of them. The word only needs
/// equal letter counts.
pub fn enumerate_xy_matchings(w: Word) -> Result<Vec<XyMatching>> {
    require_balanced(w)?;
    let xs = positions(w, Letter::X);
    let ys = positions(w, Letter::Y);
    let mut out = Vec::new();
    perm::for_each_arrangement(&ys, &mut |partners| {
        let mut sigma = vec![0; w.len()];
        for (&x, &y) in xs.iter().zip(partners) {
            sigma[x] = y;
            sigma[y] = x;
        }
        out.push(XyMatching { word: w, sigma });
    });
    Ok(out)
}

/// `N_t(w)` for every `t`: entry `t` counts the xy-matchings of `w` with
/// negativity `t`. Computed without materialising the matchings.
pub fn negativity_distribution(w: Word) -> Result<Vec<u64>> {
    require_balanced(w)?;
    let xs = positions(w, Letter::X);
    let ys = positions(w, Letter::Y);
    let mut counts = vec![0u64; xs.len() + 1];

    fn go(xs: &[usize], ys: &[usize], used: &mut [bool], neg: usize, counts: &mut [u64]) {
        let Some((&x, rest)) = xs.split_first() else {
            counts[neg] += 1;
            return;
        };
        for (k, &y) in ys.iter().enumerate() {
            if used[k] {
                continue;
            }
            used[k] = true;
            go(rest, ys, used, neg + usize::from(y < x), counts);
            used[k] = false;
        }
    }

    go(&xs, &ys, &mut vec![false; ys.len()], 0, &mut counts);
    Ok(counts)
}

/// `N_t(w)`
pub fn count_with_negativity(w: Word, t: usize) -> Result<u64> {
    Ok(negativity_distribution(w)?.get(t).copied().unwrap_or(0))
}

/// Coefficient of the even word `w` (length `2n`) in
/// `(xy)^{⧢s} ⧢ (yx)^{⧢t}` with `s + t = n`, as `s!·t!·N_t(w)`.
pub fn coefficient_by_xy(w: Word, s: usize, t: usize) -> Result<BigInt> {
    require_even(w)?;
    let n = w.len() / 2;
    if s + t != n {
        return Err(Error::Inconsistent(format!(
            "s + t = {} but {w} has {n} letter pairs",
            s + t
        )));
    }
    let n_t = count_with_negativity(w, t)?;
    Ok(factorial(s as u32) * factorial(t as u32) * n_t)
}

/// Coefficient of the even word `w` (length `2n`) in `(xy − yx)^{⧢n}`, as
/// `n!·Σ_δ sgn(δ)` over the xy-matchings of `w`.
pub fn coefficient_even_word(w: Word) -> Result<BigInt> {
    require_even(w)?;
    let dist = negativity_distribution(w)?;
    let signed: i64 = dist
        .iter()
        .enumerate()
        .map(|(t, &c)| if t % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum();
    Ok(factorial((w.len() / 2) as u32) * signed)
}

/// `u_n`: the sum of `coefficient_even_word` over all even words of length
/// `2n`. Zero for odd `n`.
pub fn u_by_xy(n: usize) -> BigInt {
    Word::even_words(n)
        .map(|w| coefficient_even_word(w).expect("enumerated words are even"))
        .sum()
}
