//! Monte Carlo estimators over polygonal Brownian paths.
//!
//! Sample `i` draws its increments from a ChaCha8 stream keyed by the seed
//! with stream number `i`, so every path depends only on `(seed, i)`.
//! Samples are split into contiguous per-worker chunks and the per-worker
//! statistics are merged by a fixed pairwise tree, which makes the output
//! bit-identical for a fixed `(seed, samples, steps, workers)`.

use std::ops::Range;
use std::thread;

use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::path::{levy_area_of_increments, sample_increments};
use super::signature::{SegmentScratch, TruncatedSignature};
use crate::error::{Error, Result};
use crate::moments::moment_closed_form;
use crate::shuffle_algebra::Word;

use super::signature::expected_signature;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct McConfig {
    pub samples: u64,
    pub steps: usize,
    /// Time horizon `T`.
    pub time: f64,
    pub seed: u64,
    pub workers: usize,
    /// Average each path with its reflection `−B`.
    pub antithetic: bool,
}

impl McConfig {
    pub fn new(samples: u64, steps: usize, seed: u64) -> Self {
        McConfig {
            samples,
            steps,
            time: 1.0,
            seed,
            workers: 1,
            antithetic: false,
        }
    }

    pub fn with_time(mut self, time: f64) -> Self {
        self.time = time;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_antithetic(mut self, antithetic: bool) -> Self {
        self.antithetic = antithetic;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        if self.samples < 2 {
            return bad(format!("need at least 2 samples, got {}", self.samples));
        }
        if self.steps == 0 {
            return bad("steps must be at least 1".into());
        }
        if !(self.time > 0.0 && self.time.is_finite()) {
            return bad(format!("time horizon must be positive, got {}", self.time));
        }
        if self.workers == 0 {
            return bad("workers must be at least 1".into());
        }
        Ok(())
    }
}

/// Count, mean and sum of squared deviations (Welford / Chan).
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct RunningStats {
    pub count: u64,
    pub mean: f64,
    pub m2: f64,
}

impl RunningStats {
    pub fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    pub fn merge(&self, other: &RunningStats) -> RunningStats {
        if self.count == 0 {
            return *other;
        }
        if other.count == 0 {
            return *self;
        }
        let count = self.count + other.count;
        let (na, nb, n) = (self.count as f64, other.count as f64, count as f64);
        let delta = other.mean - self.mean;
        RunningStats {
            count,
            mean: self.mean + delta * nb / n,
            m2: self.m2 + other.m2 + delta * delta * na * nb / n,
        }
    }

    /// Unbiased sample variance.
    pub fn variance(&self) -> f64 {
        if self.count < 2 {
            return 0.0;
        }
        self.m2 / (self.count - 1) as f64
    }

    pub fn std_error(&self) -> f64 {
        if self.count == 0 {
            return 0.0;
        }
        (self.variance() / self.count as f64).sqrt()
    }
}

/// One estimated quantity with its provenance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct McEstimate {
    pub target: String,
    pub estimate: f64,
    pub std_error: f64,
    pub samples: u64,
    pub steps: usize,
    pub seed: u64,
    pub workers: usize,
    pub reference_value: Option<f64>,
}

impl McEstimate {
    fn from_stats(target: String, stats: &RunningStats, config: &McConfig, reference_value: Option<f64>) -> Self {
        McEstimate {
            target,
            estimate: stats.mean,
            std_error: stats.std_error(),
            samples: stats.count,
            steps: config.steps,
            seed: config.seed,
            workers: config.workers,
            reference_value,
        }
    }

    /// `|estimate − reference| / SE`; `None` without a reference.
    pub fn sigma_distance(&self) -> Option<f64> {
        let reference = self.reference_value?;
        let gap = (self.estimate - reference).abs();
        Some(if self.std_error > 0.0 {
            gap / self.std_error
        } else if gap == 0.0 {
            0.0
        } else {
            f64::INFINITY
        })
    }

    /// `|estimate − reference| ≤ k·SE + allowance`.
    pub fn within(&self, k: f64, allowance: f64) -> bool {
        self.reference_value
            .is_some_and(|r| (self.estimate - r).abs() <= k * self.std_error + allowance)
    }

    pub fn csv_header() -> &'static str {
        "target,estimate,std_error,samples,steps,seed,workers,reference_value"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.target,
            self.estimate,
            self.std_error,
            self.samples,
            self.steps,
            self.seed,
            self.workers,
            self.reference_value.map(|r| r.to_string()).unwrap_or_default()
        )
    }
}

/// A per-path statistic with `dims` components.
trait Evaluator: Sync {
    type Scratch;

    fn dims(&self) -> usize;

    fn scratch(&self) -> Self::Scratch;

    fn evaluate(&self, increments: &[(f64, f64)], scratch: &mut Self::Scratch, out: &mut [f64]);
}

fn chunks(samples: u64, workers: usize) -> Vec<Range<u64>> {
    let workers = workers as u64;
    let (base, extra) = (samples / workers, samples % workers);
    let mut start = 0;
    (0..workers)
        .map(|w| {
            let len = base + u64::from(w < extra);
            let range = start..start + len;
            start += len;
            range
        })
        .collect()
}

fn run_chunk<E: Evaluator>(config: &McConfig, key: [u8; 32], range: Range<u64>, eval: &E) -> Vec<RunningStats> {
    let dims = eval.dims();
    let mut stats = vec![RunningStats::default(); dims];
    let mut scratch = eval.scratch();
    let mut increments = vec![(0.0, 0.0); config.steps];
    let mut out = vec![0.0; dims];
    let mut mirrored = vec![0.0; dims];
    let variance = config.time / config.steps as f64;
    for index in range {
        let mut rng = ChaCha8Rng::from_seed(key);
        rng.set_stream(index);
        sample_increments(&mut rng, variance, &mut increments);
        eval.evaluate(&increments, &mut scratch, &mut out);
        if config.antithetic {
            for inc in increments.iter_mut() {
                *inc = (-inc.0, -inc.1);
            }
            eval.evaluate(&increments, &mut scratch, &mut mirrored);
            for (o, m) in out.iter_mut().zip(&mirrored) {
                *o = 0.5 * (*o + m);
            }
        }
        for (s, &x) in stats.iter_mut().zip(&out) {
            s.push(x);
        }
    }
    stats
}

fn tree_reduce(mut parts: Vec<Vec<RunningStats>>) -> Vec<RunningStats> {
    while parts.len() > 1 {
        let mut next = Vec::with_capacity(parts.len().div_ceil(2));
        let mut iter = parts.into_iter();
        while let Some(left) = iter.next() {
            match iter.next() {
                Some(right) => next.push(left.iter().zip(&right).map(|(a, b)| a.merge(b)).collect()),
                None => next.push(left),
            }
        }
        parts = next;
    }
    parts.pop().unwrap_or_default()
}

fn run<E: Evaluator>(config: &McConfig, eval: &E) -> Result<Vec<RunningStats>> {
    config.validate()?;
    let key = ChaCha8Rng::seed_from_u64(config.seed).get_seed();
    let ranges = chunks(config.samples, config.workers);
    let parts = if config.workers == 1 {
        ranges.into_iter().map(|r| run_chunk(config, key, r, eval)).collect()
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .into_iter()
                .map(|r| scope.spawn(move || run_chunk(config, key, r, eval)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("Monte Carlo worker panicked"))
                .collect()
        })
    };
    Ok(tree_reduce(parts))
}

struct AreaPowers<'a>(&'a [usize]);

impl Evaluator for AreaPowers<'_> {
    type Scratch = ();

    fn dims(&self) -> usize {
        self.0.len()
    }

    fn scratch(&self) {}

    fn evaluate(&self, increments: &[(f64, f64)], _: &mut (), out: &mut [f64]) {
        let area: f64 = levy_area_of_increments(increments.iter().copied());
        for (o, &n) in out.iter_mut().zip(self.0) {
            *o = area.powi(n as i32);
        }
    }
}

/// Sample moments `E[A_T^n]`, referenced against `T^n·2^{−n}·E_n`.
pub fn estimate_moments(orders: &[usize], config: &McConfig) -> Result<Vec<McEstimate>> {
    let stats = run(config, &AreaPowers(orders))?;
    Ok(orders
        .iter()
        .zip(&stats)
        .map(|(&n, s)| {
            let exact = moment_closed_form(n).to_f64().unwrap_or(f64::NAN) * config.time.powi(n as i32);
            McEstimate::from_stats(format!("E[A^{n}]"), s, config, Some(exact))
        })
        .collect())
}

struct AreaCharfn<'a>(&'a [f64]);

impl Evaluator for AreaCharfn<'_> {
    type Scratch = ();

    fn dims(&self) -> usize {
        2 * self.0.len()
    }

    fn scratch(&self) {}

    fn evaluate(&self, increments: &[(f64, f64)], _: &mut (), out: &mut [f64]) {
        let area: f64 = levy_area_of_increments(increments.iter().copied());
        for (i, &z) in self.0.iter().enumerate() {
            let (s, c) = (z * area).sin_cos();
            out[2 * i] = c;
            out[2 * i + 1] = s;
        }
    }
}

/// `E[exp(izA_{2π})]` split into its real part (the estimate proper) and
/// its imaginary part, which vanishes in expectation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharfnEstimate {
    pub z: f64,
    pub real: McEstimate,
    pub imaginary: McEstimate,
}

/// Estimates at `T = 2π` regardless of `config.time`.
pub fn estimate_charfn(zs: &[f64], config: &McConfig) -> Result<Vec<CharfnEstimate>> {
    let config = config.clone().with_time(2.0 * std::f64::consts::PI);
    let stats = run(&config, &AreaCharfn(zs))?;
    Ok(zs
        .iter()
        .zip(stats.chunks(2))
        .map(|(&z, pair)| CharfnEstimate {
            z,
            real: McEstimate::from_stats(
                format!("Re E[exp(i*{z}*A)]"),
                &pair[0],
                &config,
                Some(crate::moments::charfn_reference(z)),
            ),
            imaginary: McEstimate::from_stats(format!("Im E[exp(i*{z}*A)]"), &pair[1], &config, Some(0.0)),
        })
        .collect())
}

struct SignatureEntries(usize);

impl Evaluator for SignatureEntries {
    type Scratch = (TruncatedSignature<f64>, SegmentScratch<f64>);

    fn dims(&self) -> usize {
        (1usize << (self.0 + 1)) - 2
    }

    fn scratch(&self) -> Self::Scratch {
        (
            TruncatedSignature::unit(self.0).expect("level checked before sampling"),
            SegmentScratch::new(self.0),
        )
    }

    fn evaluate(&self, increments: &[(f64, f64)], scratch: &mut Self::Scratch, out: &mut [f64]) {
        let (sig, seg) = scratch;
        *sig = TruncatedSignature::unit(self.0).expect("level checked before sampling");
        for &(dx, dy) in increments {
            sig.push_segment(dx, dy, seg);
        }
        let mut at = 0;
        for k in 1..=self.0 {
            let level = sig.coefficients(k);
            out[at..at + level.len()].copy_from_slice(level);
            at += level.len();
        }
    }
}

/// Entry-wise Monte Carlo mean of the truncated signature.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SignatureEstimate {
    pub level: usize,
    /// One estimate per word of length `1..=level`, shortest first and
    /// lexicographic within a level.
    pub entries: Vec<McEstimate>,
}

impl SignatureEstimate {
    pub fn entry(&self, w: Word) -> &McEstimate {
        assert!((1..=self.level).contains(&w.len()), "no estimate for {w}");
        &self.entries[(1usize << w.len()) - 2 + w.bits() as usize]
    }

    /// The estimates at level `k` as a signature-shaped array.
    pub fn mean(&self) -> TruncatedSignature<f64> {
        let mut sig = TruncatedSignature::unit(self.level).expect("level already validated");
        for k in 1..=self.level {
            for (i, c) in sig.coefficients_mut(k).iter_mut().enumerate() {
                *c = self.entries[(1usize << k) - 2 + i].estimate;
            }
        }
        sig
    }
}

/// Monte Carlo expected signature, referenced entry-wise against
/// `exp(½T(xx + yy))` truncated at `level`.
pub fn estimate_expected_signature(level: usize, config: &McConfig) -> Result<SignatureEstimate> {
    let reference = expected_signature(level)?;
    if level == 0 {
        return Ok(SignatureEstimate { level, entries: Vec::new() });
    }
    let stats = run(config, &SignatureEntries(level))?;
    let mut entries = Vec::with_capacity(stats.len());
    let mut it = stats.iter();
    for k in 1..=level {
        let scale = config.time.powi(k as i32 / 2);
        for bits in 0..1u64 << k {
            let w = Word::from_bits(bits, k);
            let exact = reference.get(w).to_f64().unwrap_or(f64::NAN) * scale;
            let s = it.next().expect("one statistic per entry");
            entries.push(McEstimate::from_stats(format!("S[{w}]"), s, config, Some(exact)));
        }
    }
    Ok(SignatureEstimate { level, entries })
}
