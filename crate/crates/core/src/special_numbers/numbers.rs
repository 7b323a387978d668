use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::series::Series;

/// A prefix of an integer sequence. `first_index` is the index of
/// `values[0]` (0 for Euler numbers, 1 for tangent numbers).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerSequence {
    pub first_index: usize,
    pub values: Vec<BigInt>,
}

impl IntegerSequence {
    pub fn get(&self, index: usize) -> Option<&BigInt> {
        index
            .checked_sub(self.first_index)
            .and_then(|i| self.values.get(i))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.values.iter().map(BigInt::to_string).collect()
    }
}

/// Serialized as a JSON array of decimal strings.
impl Serialize for IntegerSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

static EULER_CACHE: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());
static TANGENT_CACHE: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());

/// Cached prefix of length `len`, recomputed by `fill` when too short.
fn cached(cache: &Mutex<Vec<BigInt>>, len: usize, fill: impl FnOnce(usize) -> Vec<BigInt>) -> Vec<BigInt> {
    {
        let guard = cache.lock().unwrap_or_else(|e| e.into_inner());
        if guard.len() >= len {
            return guard[..len].to_vec();
        }
    }
    let values = fill(len);
    let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
    if guard.len() < values.len() {
        *guard = values.clone();
    }
    values
}

/// `E_0 ..= E_max`, the EGF coefficients of `sec z`.
pub fn euler_numbers(max: usize) -> IntegerSequence {
    let values = cached(&EULER_CACHE, max + 1, |len| {
        let sec = Series::cos(len).reciprocal();
        (0..len).map(|n| sec.egf_integer(n)).collect()
    });
    IntegerSequence { first_index: 0, values }
}

pub fn euler_number(n: usize) -> BigInt {
    euler_numbers(n).values[n].clone()
}

/// `T_1 ..= T_count`, where `tan z = Σ T_r z^{2r−1}/(2r−1)!`.
pub fn tangent_numbers(count: usize) -> IntegerSequence {
    let values = cached(&TANGENT_CACHE, count, |count| {
        let len = 2 * count;
        let tan = &Series::sin(len) * &Series::cos(len).reciprocal();
        (1..=count).map(|r| tan.egf_integer(2 * r - 1)).collect()
    });
    IntegerSequence { first_index: 1, values }
}

pub fn tangent_number(r: usize) -> BigInt {
    assert!(r >= 1, "tangent numbers start at T_1");
    tangent_numbers(r).values[r - 1].clone()
}

/// Row `t` of the Eulerian triangle: entry `d` counts permutations of `t`
/// elements with exactly `d` descents. Row 0 is `[1]`.
pub fn eulerian_numbers(t: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for n in 1..=t {
        let next = (0..n)
            .map(|d| {
                let stay = row.get(d).map_or_else(BigInt::zero, |a| a * (d + 1));
                let rise = if d > 0 {
                    row.get(d - 1).map_or_else(BigInt::zero, |a| a * (n - d))
                } else {
                    BigInt::zero()
                };
                stay + rise
            })
            .collect();
        row = next;
    }
    row
}

/// `Σ_d (−1)^d ⟨2r−1, d⟩`, checked against `(−1)^{r−1}·T_r`.
pub fn alternating_eulerian_sum(r: usize) -> BigInt {
    assert!(r >= 1, "alternating Eulerian sums start at r = 1");
    let sum: BigInt = eulerian_numbers(2 * r - 1)
        .into_iter()
        .enumerate()
        .map(|(d, a)| if d % 2 == 0 { a } else { -a })
        .sum();
    let tangent = tangent_number(r);
    let expected = if r % 2 == 1 { tangent } else { -tangent };
    assert_eq!(sum, expected, "alternating Eulerian sum identity fails at r = {r}");
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matchings::perm::for_each_arrangement;
    use crate::shuffle_algebra::rational::{binomial, factorial};

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    fn descents(p: &[usize]) -> usize {
        p.windows(2).filter(|w| w[0] > w[1]).count()
    }

    fn brute_force_eulerian(t: usize) -> Vec<BigInt> {
        let mut row = vec![BigInt::zero(); t.max(1)];
        let items: Vec<usize> = (0..t).collect();
        for_each_arrangement(&items, &mut |p| row[descents(p)] += 1);
        row
    }

    #[test]
    fn euler_values() {
        let e = euler_numbers(10);
        assert_eq!(e.values, ints(&[1, 0, 1, 0, 5, 0, 61, 0, 1385, 0, 50521]));
        assert_eq!(e.get(8), Some(&BigInt::from(1385)));
        assert_eq!(e.get(11), None);
        // prefix stability regardless of cache state
        assert_eq!(euler_numbers(4).values, ints(&[1, 0, 1, 0, 5]));
    }

    #[test]
    fn euler_convolution_identity() {
        // Σ_k (−1)^k C(2n, 2k) E_{2n−2k} = 0 for n ≥ 1; solving for E_{2n}
        // gives an independent recurrence.
        let mut even: Vec<BigInt> = vec![BigInt::one()];
        for n in 1..=10u32 {
            let rest: BigInt = (1..=n)
                .map(|k| {
                    let term = binomial(2 * n, 2 * k) * &even[(n - k) as usize];
                    if k % 2 == 1 { term } else { -term }
                })
                .sum();
            even.push(rest);
        }
        let e = euler_numbers(21);
        for (n, value) in even.iter().enumerate() {
            assert_eq!(&e.values[2 * n], value, "E_{}", 2 * n);
            assert!(e.values[2 * n + 1].is_zero());
        }
    }

    #[test]
    fn tangent_values() {
        let t = tangent_numbers(6);
        assert_eq!(t.values, ints(&[1, 2, 16, 272, 7936, 353792]));
        assert_eq!(t.get(1), Some(&BigInt::from(1)));
        assert_eq!(t.get(0), None);
        assert_eq!(tangent_number(4), BigInt::from(272));
    }

    #[test]
    fn tangent_from_derivative_identity() {
        // tan' = 1 + tan², checked on exact series.
        let len = 16;
        let tan = &Series::sin(len) * &Series::cos(len).reciprocal();
        let lhs = tan.derivative();
        let rhs = &Series::one(len - 1) + &(&tan * &tan).truncate(len - 1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn eulerian_rows() {
        assert_eq!(eulerian_numbers(1), ints(&[1]));
        assert_eq!(eulerian_numbers(3), ints(&[1, 4, 1]));
        assert_eq!(eulerian_numbers(5), ints(&[1, 26, 66, 26, 1]));
        for t in 1..=6 {
            assert_eq!(eulerian_numbers(t), brute_force_eulerian(t), "row {t}");
        }
        for t in 1..=12u32 {
            let row = eulerian_numbers(t as usize);
            assert_eq!(row.iter().sum::<BigInt>(), factorial(t));
            let reversed: Vec<BigInt> = row.iter().rev().cloned().collect();
            assert_eq!(row, reversed);
        }
    }

    #[test]
    fn alternating_sums() {
        assert_eq!(alternating_eulerian_sum(1), BigInt::from(1));
        assert_eq!(alternating_eulerian_sum(2), BigInt::from(-2));
        assert_eq!(alternating_eulerian_sum(3), BigInt::from(16));
        for r in 1..=4 {
            let signed: i64 = {
                let items: Vec<usize> = (0..2 * r - 1).collect();
                let mut acc = 0i64;
                for_each_arrangement(&items, &mut |p| {
                    acc += if descents(p).is_multiple_of(2) { 1 } else { -1 };
                });
                acc
            };
            assert_eq!(alternating_eulerian_sum(r), BigInt::from(signed), "r = {r}");
        }
    }

    #[test]
    fn serializes_as_decimal_strings() {
        let json = serde_json::to_string(&euler_numbers(4)).unwrap();
        assert_eq!(json, r#"["1","0","1","0","5"]"#);
    }
}
