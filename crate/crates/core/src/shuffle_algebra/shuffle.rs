use std::collections::HashMap;

use num_traits::Zero;

use super::poly::TensorPoly;
use super::rational::{integer, Rational};
use super::word::{concat, Letter, Word};

/// All `(m, n)`-shuffles: permutations `σ` of `{1..m+n}` (one-line
/// notation, 1-indexed) with `σ(1) < … < σ(m)` and `σ(m+1) < … < σ(m+n)`.
///
/// A shuffle is fixed by the image set of `{1..m}`, so the list is produced
/// by walking the `m`-subsets of `{1..m+n}` in lexicographic order.
pub fn enumerate_shuffles(m: usize, n: usize) -> Vec<Vec<usize>> {
    let total = m + n;
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = (1..=m).collect();
    loop {
        let mut perm = chosen.clone();
        perm.extend((1..=total).filter(|k| !chosen.contains(k)));
        out.push(perm);

        // Advance to the next m-subset.
        let Some(i) = (0..m).rev().find(|&i| chosen[i] < total - (m - 1 - i)) else {
            break;
        };
        chosen[i] += 1;
        for j in i + 1..m {
            chosen[j] = chosen[j - 1] + 1;
        }
    }
    out
}

/// The word produced by one shuffle: letter `i` of `u·v` is placed at
/// position `σ(i)`.
pub fn apply_shuffle(u: Word, v: Word, sigma: &[usize]) -> Word {
    let joined = concat(u, v);
    let mut placed = vec![Letter::X; joined.len()];
    for (i, &target) in sigma.iter().enumerate() {
        placed[target - 1] = joined.letter(i);
    }
    Word::from_letters(placed).expect("shuffle output fits")
}

/// Shuffle product of two words by enumerating permutations. Exponentially
/// slower than [`shuffle`]; kept as an independent reference.
pub fn shuffle_by_permutations(u: Word, v: Word) -> TensorPoly {
    let mut counts: HashMap<Word, u64> = HashMap::new();
    for sigma in enumerate_shuffles(u.len(), v.len()) {
        *counts.entry(apply_shuffle(u, v, &sigma)).or_default() += 1;
    }
    counts_to_poly(counts)
}

/// Multiset of words in `u ⧢ v`, as word → multiplicity.
///
/// Dynamic programming over prefixes using
/// `u ⧢ v = (u′ ⧢ v)·last(u) + (u ⧢ v′)·last(v)`.
pub fn shuffle_counts(u: Word, v: Word) -> HashMap<Word, u64> {
    let (m, n) = (u.len(), v.len());
    let u_letters: Vec<Letter> = u.letters().collect();
    let v_letters: Vec<Letter> = v.letters().collect();
    // row[j] holds prefix(u, i) ⧢ prefix(v, j) for the current i.
    let mut row: Vec<HashMap<Word, u64>> = Vec::with_capacity(n + 1);
    let mut prefix = Word::empty();
    row.push(HashMap::from([(prefix, 1)]));
    for &letter in &v_letters {
        prefix = prefix.push(letter);
        row.push(HashMap::from([(prefix, 1)]));
    }
    for i in 1..=m {
        let ui = u_letters[i - 1];
        let mut next: Vec<HashMap<Word, u64>> = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let mut cell: HashMap<Word, u64> = HashMap::new();
            for (w, c) in &row[j] {
                *cell.entry(w.push(ui)).or_default() += c;
            }
            if j > 0 {
                let vj = v_letters[j - 1];
                for (w, c) in &next[j - 1] {
                    *cell.entry(w.push(vj)).or_default() += c;
                }
            }
            next.push(cell);
        }
        row = next;
    }
    row.pop().expect("row has n + 1 cells")
}

pub fn shuffle(u: Word, v: Word) -> TensorPoly {
    counts_to_poly(shuffle_counts(u, v))
}

fn counts_to_poly(counts: HashMap<Word, u64>) -> TensorPoly {
    TensorPoly::from_terms(counts.into_iter().map(|(w, c)| (w, integer(c))))
}

/// Bilinear extension of the shuffle product.
pub fn shuffle_poly(a: &TensorPoly, b: &TensorPoly) -> TensorPoly {
    let mut acc: HashMap<Word, Rational> = HashMap::new();
    for (wa, ca) in a.iter() {
        for (wb, cb) in b.iter() {
            let product = ca * cb;
            for (w, count) in shuffle_counts(*wa, *wb) {
                let entry = acc.entry(w).or_insert_with(Rational::zero);
                *entry += &product * integer(count);
            }
        }
    }
    TensorPoly::from_accumulator(acc)
}

/// `a^{⧢0} = 1·ε`, `a^{⧢n} = a ⧢ a^{⧢(n−1)}`.
pub fn shuffle_power(a: &TensorPoly, n: usize) -> TensorPoly {
    (0..n).fold(TensorPoly::unit(), |acc, _| shuffle_poly(a, &acc))
}

/// `xy − yx`
pub fn area_tensor() -> TensorPoly {
    let xy = concat(Word::empty().push(Letter::X), Word::empty().push(Letter::Y));
    let yx = concat(Word::empty().push(Letter::Y), Word::empty().push(Letter::X));
    TensorPoly::from_terms([(xy, integer(1)), (yx, integer(-1))])
}

/// `xx + yy`
pub fn diagonal_tensor() -> TensorPoly {
    let xx = Word::empty().push(Letter::X).push(Letter::X);
    let yy = Word::empty().push(Letter::Y).push(Letter::Y);
    TensorPoly::from_terms([(xx, integer(1)), (yy, integer(1))])
}

/// `(xx + yy)^{⊗n}`: every word `z_1² … z_n²` with coefficient 1.
pub fn tensor_power_diag(n: usize) -> TensorPoly {
    let diag = diagonal_tensor();
    (0..n).fold(TensorPoly::unit(), |acc, _| acc.concat_product(&diag))
}

/// The duality pairing `Σ_w dual(w)·primal(w)`.
pub fn pairing(dual: &TensorPoly, primal: &TensorPoly) -> Rational {
    let (small, large) = if dual.len() <= primal.len() {
        (dual, primal)
    } else {
        (primal, dual)
    };
    small
        .iter()
        .map(|(w, c)| c * large.coeff(w))
        .fold(Rational::zero(), |acc, x| acc + x)
}
