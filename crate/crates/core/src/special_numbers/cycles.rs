//! Single-cycle XY-matching counts `c_{2r}` and the exponential-formula
//! assembly of `u_{2m}` from them.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::numbers::tangent_number;
use super::series::Series;
use crate::matchings::perm::for_each_arrangement;
use crate::matchings::{for_each_block_matching, BlockMatching};
use crate::shuffle_algebra::rational::{factorial, integer, Rational};
use crate::shuffle_algebra::Letter;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingleCycleCount {
    /// `c_{2r} = Σ sgn(Δ)` over single-cycle XY-matchings of length `2r`.
    pub total: BigInt,
    /// The same sum restricted to words starting with `X`.
    pub starting_with_x: BigInt,
}

/// Exhaustive `c_{2r}`; asserts `c_{2r} = 2·T_r` and that the words
/// starting with `X` carry exactly half.
pub fn c2r_bruteforce(r: usize) -> SingleCycleCount {
    assert!(r >= 1, "c_2r is defined for r ≥ 1");
    let mut total = 0i64;
    let mut starting_with_x = 0i64;
    for_each_block_matching(2 * r, &mut |d| {
        if d.cycle_count() == 1 {
            let sign = i64::from(d.sign());
            total += sign;
            if d.word().letter(0) == Letter::X {
                starting_with_x += sign;
            }
        }
    });
    let count = SingleCycleCount {
        total: BigInt::from(total),
        starting_with_x: BigInt::from(starting_with_x),
    };
    assert_eq!(count.total, BigInt::from(2) * &count.starting_with_x, "X/Y symmetry fails at r = {r}");
    assert_eq!(count.total, BigInt::from(2) * tangent_number(r), "c_2r = 2T_r fails at r = {r}");
    count
}

/// The single-cycle XY-matching with `W_1 = X` and
/// `σ = (1 b_1 … b_{2r−1})`, where `b` lists `{2..2r}` (1-indexed).
pub fn single_cycle_from_sequence(b: &[usize]) -> BlockMatching {
    let len = b.len() + 1;
    let mut letters = vec![Letter::X; len];
    let mut sigma = vec![0; len];
    let mut prev = 0;
    for (i, &bi) in b.iter().enumerate() {
        // b_1 is a Y, b_2 an X, and so on.
        letters[bi - 1] = if i % 2 == 0 { Letter::Y } else { Letter::X };
        sigma[prev] = bi - 1;
        prev = bi - 1;
    }
    sigma[prev] = 0;
    let word = crate::shuffle_algebra::Word::from_letters(letters).expect("length fits");
    BlockMatching::new(word, sigma).expect("alternating cycle is a valid XY-matching")
}

/// `c_{2r}` through descents: for each arrangement `b` of `{2..2r}` the
/// corresponding single-cycle matching has sign
/// `(−1)^{r−1}·(−1)^{desc(b)}`. Each sign is also checked against the
/// matching's own negativity.
pub fn c2r_by_descents(r: usize) -> BigInt {
    assert!(r >= 1);
    let rest: Vec<usize> = (2..=2 * r).collect();
    let mut half = 0i64;
    for_each_arrangement(&rest, &mut |b| {
        let descents = b.windows(2).filter(|w| w[0] > w[1]).count();
        let sign = if (r - 1 + descents).is_multiple_of(2) { 1 } else { -1 };
        assert_eq!(
            sign,
            single_cycle_from_sequence(b).sign(),
            "descent sign rule fails for b = {b:?}"
        );
        half += i64::from(sign);
    });
    BigInt::from(2 * half)
}

/// Partitions of `m` as multiplicity vectors `a` with `Σ r·a_r = m`
/// (`a[r-1]` is `a_r`).
pub fn partitions(m: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if part == 0 {
            if remaining == 0 {
                out.push(current.clone());
            }
            return;
        }
        for count in 0..=remaining / part {
            current[part - 1] = count;
            go(remaining - count * part, part - 1, current, out);
        }
        current[part - 1] = 0;
    }
    let mut out = Vec::new();
    go(m, m, &mut vec![0; m], &mut out);
    out
}

/// `u_{2m} = (2m)!·2^{2m}·Σ_a [(2m)!/Π(2r)!^{a_r}]·Π c_{2r}^{a_r}/(2^{a_r}·a_r!)`
/// with `c_{2r} = 2T_r`.
pub fn u_from_exponential_formula(m: usize) -> BigInt {
    if m == 0 {
        return BigInt::one();
    }
    let two_m = factorial(2 * m as u32);
    let mut sum = Rational::zero();
    for a in partitions(m) {
        let mut term = integer(two_m.clone());
        for (index, &count) in a.iter().enumerate() {
            let r = index + 1;
            if count == 0 {
                continue;
            }
            let c = BigInt::from(2) * tangent_number(r);
            let block = factorial(2 * r as u32);
            term /= integer(num_traits::pow(block, count));
            term *= integer(num_traits::pow(c, count));
            term /= integer(factorial(count as u32) * (BigInt::one() << count));
        }
        sum += term;
    }
    let total = sum * integer(two_m) * integer(BigInt::one() << (2 * m));
    assert!(total.is_integer(), "u_2m must be integral, got {total}");
    total.to_integer()
}

/// `f(z) = exp(Σ_r (c_{2r}/2)·z^{2r}/(2r)!)` through `z^{len−1}`, with
/// `c_{2r} = 2T_r`.
pub fn single_cycle_exponential(len: usize) -> Series {
    let inner = Series::from_egf(len, |n| {
        if n >= 2 && n % 2 == 0 {
            integer(tangent_number(n / 2))
        } else {
            Rational::zero()
        }
    });
    inner.exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matchings::u_by_block_matchings;
    use crate::special_numbers::numbers::euler_number;

    #[test]
    fn c2r_small() {
        assert_eq!(c2r_bruteforce(1).total, BigInt::from(2));
        assert_eq!(c2r_bruteforce(1).starting_with_x, BigInt::from(1));
        assert_eq!(c2r_bruteforce(2).total, BigInt::from(4));
        assert_eq!(c2r_bruteforce(3).total, BigInt::from(32));
    }

    #[test]
    fn descent_route_agrees() {
        for r in 1..=4 {
            assert_eq!(c2r_by_descents(r), BigInt::from(2) * tangent_number(r), "r = {r}");
        }
    }

    #[test]
    fn sequence_to_cycle() {
        let d = single_cycle_from_sequence(&[2, 3, 4]);
        assert_eq!(format!("{d:?}"), "(XYXY, (1 2 3 4))");
        let d = single_cycle_from_sequence(&[4, 3, 2]);
        assert_eq!(format!("{d:?}"), "(XYXY, (1 4 3 2))");
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(partitions(1), vec![vec![1]]);
        assert_eq!(partitions(2).len(), 2);
        assert_eq!(partitions(5).len(), 7);
        for a in partitions(6) {
            assert_eq!(a.iter().enumerate().map(|(i, c)| (i + 1) * c).sum::<usize>(), 6);
        }
    }

    #[test]
    fn exponential_formula_values() {
        assert_eq!(u_from_exponential_formula(1), BigInt::from(8));
        assert_eq!(u_from_exponential_formula(2), BigInt::from(1920));
        assert_eq!(u_from_exponential_formula(3), BigInt::from(2_810_880));
        for m in 1..=3 {
            assert_eq!(u_from_exponential_formula(m), u_by_block_matchings(m), "m = {m}");
        }
    }

    #[test]
    fn generating_function_matches_lemma_sum() {
        let f = single_cycle_exponential(17);
        for m in 0..=8 {
            let scale = integer(factorial(2 * m as u32)) * integer(BigInt::one() << (2 * m));
            let from_lemma = integer(u_from_exponential_formula(m)) / scale;
            assert_eq!(f.egf_coeff(2 * m), from_lemma, "m = {m}");
            assert_eq!(f.egf_coeff(2 * m), integer(euler_number(2 * m)));
        }
    }
}
