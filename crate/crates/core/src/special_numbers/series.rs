//! Truncated formal power series over exact rationals.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::shuffle_algebra::rational::{factorial, integer, Rational};

/// Coefficients of `z^0 .. z^{len-1}`; everything from `z^len` on is
/// unknown. Binary operations truncate to the shorter operand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Series { coeffs }
    }

    pub fn zero(len: usize) -> Self {
        Series::new(vec![Rational::zero(); len])
    }

    pub fn one(len: usize) -> Self {
        let mut s = Series::zero(len);
        if len > 0 {
            s.coeffs[0] = Rational::one();
        }
        s
    }

    /// Series whose `n!`-scaled coefficients are `egf(n)`.
    pub fn from_egf(len: usize, egf: impl Fn(usize) -> Rational) -> Self {
        Series::new(
            (0..len)
                .map(|n| egf(n) / integer(factorial(n as u32)))
                .collect(),
        )
    }

    /// `cos z` through `z^{len-1}`.
    pub fn cos(len: usize) -> Self {
        Series::from_egf(len, |n| match n % 4 {
            0 => integer(1),
            2 => integer(-1),
            _ => Rational::zero(),
        })
    }

    /// `sin z` through `z^{len-1}`.
    pub fn sin(len: usize) -> Self {
        Series::from_egf(len, |n| match n % 4 {
            1 => integer(1),
            3 => integer(-1),
            _ => Rational::zero(),
        })
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `n!·[z^n]`, the exponential-generating-function coefficient.
    pub fn egf_coeff(&self, n: usize) -> Rational {
        &self.coeffs[n] * integer(factorial(n as u32))
    }

    /// `n!·[z^n]`, asserted to be an integer.
    pub fn egf_integer(&self, n: usize) -> BigInt {
        let value = self.egf_coeff(n);
        assert!(value.is_integer(), "EGF coefficient {n} is not integral: {value}");
        value.to_integer()
    }

    pub fn truncate(&self, len: usize) -> Series {
        Series::new(self.coeffs.iter().take(len).cloned().collect())
    }

    /// `1/self`; requires a nonzero constant term.
    pub fn reciprocal(&self) -> Series {
        let len = self.len();
        let c0 = self.coeffs.first().expect("reciprocal of an empty series");
        assert!(!c0.is_zero(), "reciprocal needs a nonzero constant term");
        let inv0 = c0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(len);
        out.push(inv0.clone());
        for n in 1..len {
            let acc = (1..=n).fold(Rational::zero(), |acc, k| acc + &self.coeffs[k] * &out[n - k]);
            out.push(-acc * &inv0);
        }
        Series::new(out)
    }

    /// `exp(self)`; requires a zero constant term. Uses `f' = g'·f`.
    pub fn exp(&self) -> Series {
        let len = self.len();
        if len == 0 {
            return Series::zero(0);
        }
        assert!(self.coeffs[0].is_zero(), "exp needs a zero constant term");
        let mut out: Vec<Rational> = Vec::with_capacity(len);
        out.push(Rational::one());
        for n in 1..len {
            let acc = (1..=n).fold(Rational::zero(), |acc, k| {
                acc + integer(k) * &self.coeffs[k] * &out[n - k]
            });
            out.push(acc / integer(n));
        }
        Series::new(out)
    }

    /// Antiderivative with zero constant term; gains one coefficient.
    pub fn integrate(&self) -> Series {
        let mut out = Vec::with_capacity(self.len() + 1);
        out.push(Rational::zero());
        out.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c / integer(n + 1)),
        );
        Series::new(out)
    }

    pub fn derivative(&self) -> Series {
        Series::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c * integer(n))
                .collect(),
        )
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        Series::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        Series::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect())
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let len = self.len().min(rhs.len());
        Series::new(
            (0..len)
                .map(|n| {
                    (0..=n).fold(Rational::zero(), |acc, k| acc + &self.coeffs[k] * &rhs.coeffs[n - k])
                })
                .collect(),
        )
    }
}
