use num_traits::Num;

use super::path::PolygonalPath;
use crate::error::{Error, Result};
use crate::shuffle_algebra::rational::{factorial, integer, pow, Rational};
use crate::shuffle_algebra::{tensor_power_diag, Letter, Word};

/// Highest supported truncation level.
pub const MAX_LEVEL: usize = 6;

/// Signature truncated at level `L`, stored densely: level `k` holds `2^k`
/// coefficients and the entry for a word `w` of length `k` sits at index
/// `w.bits()` (x = 0, y = 1, first letter most significant).
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSignature<S = f64> {
    levels: Vec<Vec<S>>,
}

fn check_level(level: usize) -> Result<()> {
    if level > MAX_LEVEL {
        return Err(Error::LimitExceeded {
            what: "signature level",
            requested: level,
            limit: MAX_LEVEL,
        });
    }
    Ok(())
}

fn small<S: Num>(n: usize) -> S {
    (0..n).fold(S::zero(), |acc, _| acc + S::one())
}

impl<S: Num + Clone> TruncatedSignature<S> {
    /// The signature of a constant path.
    pub fn unit(level: usize) -> Result<Self> {
        check_level(level)?;
        let levels = (0..=level)
            .map(|k| {
                let mut v = vec![S::zero(); 1 << k];
                if k == 0 {
                    v[0] = S::one();
                }
                v
            })
            .collect();
        Ok(TruncatedSignature { levels })
    }

    pub fn zeros(level: usize) -> Result<Self> {
        check_level(level)?;
        Ok(TruncatedSignature {
            levels: (0..=level).map(|k| vec![S::zero(); 1 << k]).collect(),
        })
    }

    pub fn level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn coefficients(&self, k: usize) -> &[S] {
        &self.levels[k]
    }

    pub fn coefficients_mut(&mut self, k: usize) -> &mut [S] {
        &mut self.levels[k]
    }

    pub fn get(&self, w: Word) -> &S {
        &self.levels[w.len()][w.bits() as usize]
    }

    /// Truncated tensor product `self ⊗ rhs`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let level = self.level().min(rhs.level());
        let levels = (0..=level)
            .map(|k| {
                let mut out = vec![S::zero(); 1 << k];
                for j in 0..=k {
                    let (a, b) = (&self.levels[j], &rhs.levels[k - j]);
                    for (p, ap) in a.iter().enumerate() {
                        if ap.is_zero() {
                            continue;
                        }
                        for (q, bq) in b.iter().enumerate() {
                            let slot = &mut out[(p << (k - j)) | q];
                            *slot = slot.clone() + ap.clone() * bq.clone();
                        }
                    }
                }
                out
            })
            .collect();
        TruncatedSignature { levels }
    }

    /// `self ← self ⊗ exp(dx·x + dy·y)`, evaluated level by level from the
    /// top with a Horner scheme so that lower levels are still intact when
    /// read.
    pub fn push_segment(&mut self, dx: S, dy: S, scratch: &mut SegmentScratch<S>) {
        let inc = [dx, dy];
        for k in (1..=self.level()).rev() {
            let acc = &mut scratch.acc;
            let next = &mut scratch.next;
            acc.clear();
            acc.push(self.levels[0][0].clone());
            for i in 1..=k {
                let inv = &scratch.inverses[k - i + 1];
                next.clear();
                next.extend(self.levels[i].iter().cloned());
                for (p, a) in acc.iter().enumerate() {
                    let scaled = a.clone() * inv.clone();
                    for (b, d) in inc.iter().enumerate() {
                        let slot = &mut next[(p << 1) | b];
                        *slot = slot.clone() + scaled.clone() * d.clone();
                    }
                }
                std::mem::swap(acc, next);
            }
            self.levels[k].clone_from_slice(acc);
        }
    }
}

/// Reusable buffers for [`TruncatedSignature::push_segment`].
#[derive(Debug, Clone)]
pub struct SegmentScratch<S> {
    acc: Vec<S>,
    next: Vec<S>,
    inverses: Vec<S>,
}

impl<S: Num + Clone> SegmentScratch<S> {
    pub fn new(level: usize) -> Self {
        SegmentScratch {
            acc: Vec::with_capacity(1 << level),
            next: Vec::with_capacity(1 << level),
            inverses: (0..=level.max(1))
                .map(|c| if c == 0 { S::zero() } else { S::one() / small::<S>(c) })
                .collect(),
        }
    }
}

/// `exp(dx·x + dy·y)` truncated at `level`: level `k` is `Δ^{⊗k}/k!`.
pub fn segment_signature<S: Num + Clone>(dx: S, dy: S, level: usize) -> Result<TruncatedSignature<S>> {
    let mut sig = TruncatedSignature::<S>::unit(level)?;
    let inc = [dx, dy];
    for k in 1..=level {
        let k_s: S = small(k);
        let (lower, upper) = sig.levels.split_at_mut(k);
        let prev = &lower[k - 1];
        for (p, v) in prev.iter().enumerate() {
            for (b, d) in inc.iter().enumerate() {
                upper[0][(p << 1) | b] = v.clone() * d.clone() / k_s.clone();
            }
        }
    }
    Ok(sig)
}

/// Signature of the polygonal path with the given increments.
pub fn signature_of_increments<S, I>(increments: I, level: usize) -> Result<TruncatedSignature<S>>
where
    S: Num + Clone,
    I: IntoIterator<Item = (S, S)>,
{
    let mut sig = TruncatedSignature::unit(level)?;
    let mut scratch = SegmentScratch::new(level);
    for (dx, dy) in increments {
        sig.push_segment(dx, dy, &mut scratch);
    }
    Ok(sig)
}

/// Ordered product of segment signatures (Chen's identity).
pub fn path_signature(path: &PolygonalPath, level: usize) -> Result<TruncatedSignature<f64>> {
    signature_of_increments(path.increments(), level)
}

/// `½(S_xy − S_yx)`, the area read off level 2.
pub fn area_from_signature<S: Num + Clone>(sig: &TruncatedSignature<S>) -> S {
    let level2 = &sig.levels[2];
    (level2[0b01].clone() - level2[0b10].clone()) / small(2)
}

/// `exp(½(xx + yy))` truncated at `level`, the expected signature of
/// Brownian motion on `[0, 1]`: level `2k` is `(xx + yy)^{⊗k}/(2^k·k!)`.
pub fn expected_signature(level: usize) -> Result<TruncatedSignature<Rational>> {
    let mut sig = TruncatedSignature::zeros(level)?;
    for k in 0..=level / 2 {
        let scale = integer(factorial(k as u32) << k);
        for (w, c) in tensor_power_diag(k).iter() {
            sig.levels[2 * k][w.bits() as usize] = c / &scale;
        }
    }
    Ok(sig)
}

/// Exact expected signature of the polygonal path with `steps` Gaussian
/// increments of variance `time/steps`: `(E exp(Δ))^{⊗steps}`, where
/// `E[Δ^{⊗2j}]` at a word is `h^j` times the number of ways to pair up its
/// positions letter by letter.
pub fn polygonal_expected_signature(level: usize, steps: usize, time: &Rational) -> Result<TruncatedSignature<Rational>> {
    let h = time / integer(steps);
    let double_factorial = |n: usize| -> Rational {
        integer((1..n).step_by(2).fold(num_bigint::BigInt::from(1), |acc, k| acc * k))
    };
    let mut step = TruncatedSignature::zeros(level)?;
    for k in (0..=level).step_by(2) {
        let scale = pow(&h, (k / 2) as u32) / integer(factorial(k as u32));
        for bits in 0..1u64 << k {
            let w = Word::from_bits(bits, k);
            let (nx, ny) = (w.count(Letter::X), w.count(Letter::Y));
            if nx % 2 == 0 && ny % 2 == 0 {
                step.levels[k][bits as usize] = &scale * double_factorial(nx) * double_factorial(ny);
            }
        }
    }
    Ok((0..steps).fold(TruncatedSignature::unit(level)?, |acc, _| acc.mul(&step)))
}
