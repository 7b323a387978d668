//! XY-matchings: words in the block letters `X`, `Y` with a permutation
//! exchanging X- and Y-positions. Each block letter stands for a doubled
//! letter (`X → xx`, `Y → yy`) of an even word.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::perm;
use super::xy::XyMatching;
use crate::error::{Error, Result};
use crate::shuffle_algebra::rational::{factorial, integer, Rational};
use crate::shuffle_algebra::{Letter, Word};

/// Parses an XY-word such as `"XYXYYX"`. Reuses [`Word`] storage with
/// `X`/`Y` carried by [`Letter::X`]/[`Letter::Y`].
pub fn parse_block_word(text: &str) -> Result<Word> {
    let letters = text
        .chars()
        .map(|c| match c {
            'X' => Ok(Letter::X),
            'Y' => Ok(Letter::Y),
            other => Err(Error::InvalidXyLetter(other)),
        })
        .collect::<Result<Vec<_>>>()?;
    Word::from_letters(letters)
}

pub fn block_word_string(word: Word) -> String {
    word.to_string().to_uppercase()
}

/// An XY-matching `(W, σ)`: `W_i = X ⟺ W_{σ(i)} = Y`, with `σ` a
/// permutation of all positions of `W`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockMatching {
    word: Word,
    sigma: Vec<usize>,
}

impl BlockMatching {
    pub fn new(word: Word, sigma: Vec<usize>) -> Result<Self> {
        if sigma.len() != word.len() || !perm::is_permutation(&sigma) {
            return Err(Error::InvalidMatching(format!(
                "{sigma:?} is not a permutation of the {} positions",
                word.len()
            )));
        }
        if let Some(i) = (0..word.len()).find(|&i| word.letter(i) == word.letter(sigma[i])) {
            return Err(Error::InvalidMatching(format!(
                "position {} maps to {} carrying the same letter",
                i + 1,
                sigma[i] + 1
            )));
        }
        Ok(BlockMatching { word, sigma })
    }

    /// `from_cycles("XYXYYX", &[&[1, 2, 3, 4], &[5, 6]])`
    pub fn from_cycles(word: &str, cycles: &[&[usize]]) -> Result<Self> {
        let word = parse_block_word(word)?;
        let sigma = perm::from_cycles(word.len(), cycles)?;
        BlockMatching::new(word, sigma)
    }

    pub fn word(&self) -> Word {
        self.word
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Positions `i` with `W_i = X, σ(i) < i` or `W_i = Y, σ(i) > i`.
    pub fn negativity(&self) -> usize {
        (0..self.len())
            .filter(|&i| match self.word.letter(i) {
                Letter::X => self.sigma[i] < i,
                Letter::Y => self.sigma[i] > i,
            })
            .count()
    }

    pub fn sign(&self) -> i32 {
        if self.negativity().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn cycle_count(&self) -> usize {
        perm::cycles(&self.sigma).len()
    }

    pub fn two_cycle_count(&self) -> usize {
        perm::cycles(&self.sigma).iter().filter(|c| c.len() == 2).count()
    }

    /// `e(Δ)`: each `X` becomes `xx`, each `Y` becomes `yy`.
    pub fn expand(&self) -> Word {
        let mut out = Word::empty();
        for letter in self.word.letters() {
            out = out.push(letter).push(letter);
        }
        out
    }

    /// The canonical xy-matching on `e(Δ)`: `τ(2i−1) = 2σ(i)` (1-indexed),
    /// completed to an involution.
    pub fn canonical_xy_matching(&self) -> XyMatching {
        let mut tau = vec![0; 2 * self.len()];
        for i in 0..self.len() {
            let from = 2 * i;
            let to = 2 * self.sigma[i] + 1;
            tau[from] = to;
            tau[to] = from;
        }
        XyMatching::new(self.expand(), tau).expect("canonical matching is valid")
    }

    /// Conjugates of the canonical matching by every element of the group
    /// generated by `(1 2), (3 4), …`, listed once per group element
    /// (`2^n` entries for word length `n`, with repeats).
    pub fn all_conjugates(&self) -> Vec<XyMatching> {
        let canonical = self.canonical_xy_matching();
        let tau = canonical.sigma();
        let n = self.len();
        (0..1u64 << n)
            .map(|flips| {
                let g = |p: usize| if flips >> (p / 2) & 1 == 1 { p ^ 1 } else { p };
                // g is an involution, so g τ g⁻¹ = g τ g.
                let conj: Vec<usize> = (0..2 * n).map(|p| g(tau[g(p)])).collect();
                XyMatching::new(canonical.word(), conj).expect("conjugate is valid")
            })
            .collect()
    }

    /// The distinct xy-matchings on `e(Δ)` obtained by conjugating the
    /// canonical one. There are `2^{n − (number of 2-cycles of σ)}` of them.
    pub fn xy_matchings(&self) -> Vec<XyMatching> {
        let set: BTreeSet<XyMatching> = self.all_conjugates().into_iter().collect();
        set.into_iter().collect()
    }
}

impl fmt::Debug for BlockMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", block_word_string(self.word), perm::cycle_notation(&self.sigma))
    }
}

#[derive(Serialize, Deserialize)]
struct BlockJson {
    word: String,
    sigma: Vec<usize>,
}

impl Serialize for BlockMatching {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        BlockJson {
            word: block_word_string(self.word),
            sigma: perm::to_one_indexed(&self.sigma),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BlockMatching {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = BlockJson::deserialize(deserializer)?;
        let word = parse_block_word(&raw.word).map_err(D::Error::custom)?;
        let sigma = perm::from_one_indexed(&raw.sigma).map_err(D::Error::custom)?;
        BlockMatching::new(word, sigma).map_err(D::Error::custom)
    }
}

/// Calls `visit` for every XY-matching on the given word.
pub fn for_each_block_matching_on(word: Word, visit: &mut impl FnMut(&BlockMatching)) {
    let xs: Vec<usize> = (0..word.len()).filter(|&i| word.letter(i) == Letter::X).collect();
    let ys: Vec<usize> = (0..word.len()).filter(|&i| word.letter(i) == Letter::Y).collect();
    if xs.len() != ys.len() {
        return;
    }
    let mut matching = BlockMatching {
        word,
        sigma: vec![0; word.len()],
    };
    perm::for_each_arrangement(&ys, &mut |x_images| {
        for (&x, &y) in xs.iter().zip(x_images) {
            matching.sigma[x] = y;
        }
        perm::for_each_arrangement(&xs, &mut |y_images| {
            for (&y, &x) in ys.iter().zip(y_images) {
                matching.sigma[y] = x;
            }
            visit(&matching);
        });
    });
}

/// Calls `visit` for every XY-matching of word length `len` (`len/2` of
/// each letter). Words are taken in lexicographic order.
pub fn for_each_block_matching(len: usize, visit: &mut impl FnMut(&BlockMatching)) {
    if !len.is_multiple_of(2) {
        return;
    }
    for word in Word::all_of_length(len).filter(|w| w.count(Letter::X) == len / 2) {
        for_each_block_matching_on(word, visit);
    }
}

pub fn enumerate_block_matchings(len: usize) -> Vec<BlockMatching> {
    let mut out = Vec::new();
    for_each_block_matching(len, &mut |d| out.push(d.clone()));
    out
}

/// XY-matchings `Δ` with `e(Δ) = w`. Empty unless `w` is even.
pub fn block_matchings_over(w: Word) -> Vec<BlockMatching> {
    if !w.is_even() {
        return Vec::new();
    }
    let block = Word::from_letters((0..w.len() / 2).map(|p| w.letter(2 * p))).expect("half length fits");
    let mut out = Vec::new();
    for_each_block_matching_on(block, &mut |d| out.push(d.clone()));
    out
}

/// `u_{2m} = (2m)!·2^{2m}·Σ_Δ 2^{−cyc(Δ)}·sgn(Δ)` over XY-matchings of word
/// length `2m`.
pub fn u_by_block_matchings(m: usize) -> BigInt {
    let len = 2 * m;
    let mut weighted = Rational::zero();
    for_each_block_matching(len, &mut |d| {
        let weight = Rational::new(BigInt::from(d.sign()), BigInt::one() << d.cycle_count());
        weighted += weight;
    });
    let total = weighted * integer(factorial(len as u32)) * integer(BigInt::one() << len);
    assert!(total.is_integer(), "u_{{2m}} must be an integer, got {total}");
    total.to_integer()
}

/// Coefficient of the even word `w` in `(xy − yx)^{⧢n}` via XY-matchings:
/// `n!·2^n·Σ_{e(Δ) = w} 2^{−cyc(Δ)}·sgn(Δ)`, where `2n = |w|`.
pub fn coefficient_by_block_matchings(w: Word) -> Result<BigInt> {
    if !w.is_even() {
        return Err(Error::NotEvenWord(w.to_string()));
    }
    let n = w.len() / 2;
    let weighted = block_matchings_over(w)
        .iter()
        .map(|d| Rational::new(BigInt::from(d.sign()), BigInt::one() << d.cycle_count()))
        .fold(Rational::zero(), |acc, x| acc + x);
    let total = weighted * integer(factorial(n as u32)) * integer(BigInt::one() << n);
    assert!(total.is_integer());
    Ok(total.to_integer())
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::matchings::xy::enumerate_xy_matchings;

    fn two_cycle_matching() -> BlockMatching {
        BlockMatching::from_cycles("XYXYYX", &[&[1, 2, 3, 4], &[5, 6]]).unwrap()
    }

    #[test]
    fn two_cycle_matching_statistics() {
        let d = two_cycle_matching();
        assert_eq!(d.negativity(), 3);
        assert_eq!(d.sign(), -1);
        assert_eq!(d.cycle_count(), 2);
        assert_eq!(d.expand().to_string(), "xxyyxxyyyyxx");
        assert_eq!(format!("{d:?}"), "(XYXYYX, (1 2 3 4)(5 6))");
    }

    #[test]
    fn small_statistics() {
        let xy = BlockMatching::from_cycles("XY", &[&[1, 2]]).unwrap();
        assert_eq!((xy.negativity(), xy.cycle_count()), (0, 1));
        assert_eq!(xy.expand().to_string(), "xxyy");
        let yx = BlockMatching::from_cycles("YX", &[&[1, 2]]).unwrap();
        assert_eq!((yx.negativity(), yx.sign()), (2, 1));
        assert_eq!(yx.expand().to_string(), "yyxx");
        let two = BlockMatching::from_cycles("XYXY", &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(two.cycle_count(), 2);
    }

    #[test]
    fn validation() {
        assert!(BlockMatching::from_cycles("XXYY", &[&[1, 2], &[3, 4]]).is_err());
        assert!(BlockMatching::from_cycles("XY", &[]).is_err());
        assert!(parse_block_word("XyX").is_err());
    }

    #[test]
    fn canonical_tau_of_two_cycle_matching() {
        let tau = two_cycle_matching().canonical_xy_matching();
        assert_eq!(
            perm::cycle_notation(tau.sigma()),
            "(1 4)(2 7)(3 6)(5 8)(9 12)(10 11)"
        );
        let xy = BlockMatching::from_cycles("XY", &[&[1, 2]]).unwrap();
        assert_eq!(perm::cycle_notation(xy.canonical_xy_matching().sigma()), "(1 4)(2 3)");
    }

    #[test]
    fn conjugates_of_a_single_two_cycle() {
        let xy = BlockMatching::from_cycles("XY", &[&[1, 2]]).unwrap();
        let shown: Vec<String> = xy
            .xy_matchings()
            .iter()
            .map(|d| perm::cycle_notation(d.sigma()))
            .collect();
        assert_eq!(shown, ["(1 3)(2 4)", "(1 4)(2 3)"]);
        assert_eq!(xy.all_conjugates().len(), 4);
    }

    #[test]
    fn inverse_long_cycles_give_the_same_sixteen() {
        let a = BlockMatching::from_cycles("XYXY", &[&[1, 2, 3, 4]]).unwrap();
        let b = BlockMatching::from_cycles("XYXY", &[&[1, 4, 3, 2]]).unwrap();
        assert_eq!(a.xy_matchings().len(), 16);
        assert_eq!(a.xy_matchings(), b.xy_matchings());
    }

    // Brute force at word lengths 2 and 4 (e(Δ) of length 4 and 8): the
    // distinct conjugate count is 2^{n − #2-cycles}, and the weighted count
    // 2^{n − cyc} summed over Δ with e(Δ) = w recovers every xy-matching of w
    // exactly once. Frozen below as regression checks.
    #[test]
    fn conjugate_counts_and_exact_cover() {
        for len in [2usize, 4, 6] {
            for d in enumerate_block_matchings(len) {
                let distinct = d.xy_matchings();
                assert_eq!(distinct.len(), 1 << (len - d.two_cycle_count()), "{d:?}");
                let canonical_neg = d.canonical_xy_matching().negativity();
                assert_eq!(canonical_neg, d.negativity(), "{d:?}");
                assert!(distinct.iter().all(|x| x.negativity() == canonical_neg));
            }
            for w in Word::even_words(len) {
                // Weight 2^{#2-cycles − cyc} per list membership.
                let mut cover: BTreeMap<XyMatching, Rational> = BTreeMap::new();
                let mut weighted_total = Rational::zero();
                for d in block_matchings_over(w) {
                    let long_cycles = d.cycle_count() - d.two_cycle_count();
                    let weight = Rational::new(BigInt::one(), BigInt::one() << long_cycles);
                    for x in d.xy_matchings() {
                        *cover.entry(x).or_insert_with(Rational::zero) += weight.clone();
                    }
                    weighted_total += integer(BigInt::one() << (len - d.cycle_count()));
                }
                let all = enumerate_xy_matchings(w).unwrap();
                assert_eq!(cover.len(), all.len(), "{w}");
                assert!(cover.values().all(|c| c.is_one()), "{w}");
                assert_eq!(weighted_total, integer(all.len()), "{w}");
            }
        }
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_block_matchings(0).len(), 1);
        assert_eq!(enumerate_block_matchings(2).len(), 2);
        assert_eq!(enumerate_block_matchings(4).len(), 6 * 4);
        assert_eq!(enumerate_block_matchings(6).len(), 20 * 36);
        assert!(enumerate_block_matchings(3).is_empty());
    }

    #[test]
    fn u_by_block_values() {
        assert_eq!(u_by_block_matchings(0), BigInt::from(1));
        assert_eq!(u_by_block_matchings(1), BigInt::from(8));
        assert_eq!(u_by_block_matchings(2), BigInt::from(1920));
        assert_eq!(u_by_block_matchings(3), BigInt::from(2_810_880));
    }

    #[test]
    fn json_round_trip() {
        let d = two_cycle_matching();
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(json, r#"{"word":"XYXYYX","sigma":[2,3,4,1,6,5]}"#);
        assert_eq!(serde_json::from_str::<BlockMatching>(&json).unwrap(), d);
    }
}
