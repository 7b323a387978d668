use num_traits::Num;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

/// A piecewise-linear path in the plane starting at the origin.
#[derive(Debug, Clone, PartialEq)]
pub struct PolygonalPath {
    times: Vec<f64>,
    points: Vec<(f64, f64)>,
}

impl PolygonalPath {
    pub fn new(times: Vec<f64>, points: Vec<(f64, f64)>) -> Result<Self> {
        if times.len() != points.len() {
            return Err(Error::InvalidPath(format!(
                "{} times but {} points",
                times.len(),
                points.len()
            )));
        }
        if times.first() != Some(&0.0) {
            return Err(Error::InvalidPath("times must start at 0".into()));
        }
        if points[0] != (0.0, 0.0) {
            return Err(Error::InvalidPath("path must start at the origin".into()));
        }
        if let Some(w) = times.windows(2).find(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidPath(format!(
                "times must be strictly increasing, got {} then {}",
                w[0], w[1]
            )));
        }
        Ok(PolygonalPath { times, points })
    }

    /// Path through the partial sums of `increments` on the uniform grid
    /// of `[0, horizon]`.
    pub fn from_increments(increments: &[(f64, f64)], horizon: f64) -> Result<Self> {
        if !(horizon > 0.0) {
            return Err(Error::InvalidParameter(format!("horizon must be positive, got {horizon}")));
        }
        let steps = increments.len();
        let times = (0..=steps).map(|i| horizon * i as f64 / steps.max(1) as f64).collect();
        let mut points = Vec::with_capacity(steps + 1);
        let mut at = (0.0, 0.0);
        points.push(at);
        for &(dx, dy) in increments {
            at = (at.0 + dx, at.1 + dy);
            points.push(at);
        }
        PolygonalPath::new(times, points)
    }

    /// Polygon through `points`, which must start at the origin, on the
    /// grid `0, 1, 2, …`.
    pub fn from_points(points: Vec<(f64, f64)>) -> Result<Self> {
        let times = (0..points.len()).map(|i| i as f64).collect();
        PolygonalPath::new(times, points)
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn steps(&self) -> usize {
        self.points.len() - 1
    }

    pub fn increments(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.points
            .windows(2)
            .map(|w| (w[1].0 - w[0].0, w[1].1 - w[0].1))
    }

    /// The path followed by `other`, translated to start at this path's
    /// endpoint.
    pub fn concat(&self, other: &PolygonalPath) -> PolygonalPath {
        let &(x0, y0) = self.points.last().expect("paths are nonempty");
        let t0 = *self.times.last().expect("paths are nonempty");
        let mut times = self.times.clone();
        let mut points = self.points.clone();
        for (t, &(x, y)) in other.times.iter().zip(&other.points).skip(1) {
            times.push(t0 + t);
            points.push((x0 + x, y0 + y));
        }
        PolygonalPath { times, points }
    }

    /// The same geometric path with an extra vertex inserted at fraction
    /// `lambda ∈ (0, 1)` of segment `segment`.
    pub fn split_segment(&self, segment: usize, lambda: f64) -> PolygonalPath {
        assert!(segment < self.steps() && lambda > 0.0 && lambda < 1.0);
        let (a, b) = (self.points[segment], self.points[segment + 1]);
        let (s, t) = (self.times[segment], self.times[segment + 1]);
        let mut times = self.times.clone();
        let mut points = self.points.clone();
        times.insert(segment + 1, s + lambda * (t - s));
        points.insert(segment + 1, (a.0 + lambda * (b.0 - a.0), a.1 + lambda * (b.1 - a.1)));
        PolygonalPath { times, points }
    }
}

/// Fills `out` with independent `N(0, variance·I)` increments.
pub fn sample_increments<R: Rng + ?Sized>(rng: &mut R, variance: f64, out: &mut [(f64, f64)]) {
    let sd = variance.sqrt();
    for inc in out {
        let dx: f64 = rng.sample(StandardNormal);
        let dy: f64 = rng.sample(StandardNormal);
        *inc = (sd * dx, sd * dy);
    }
}

/// A polygonal Brownian path with `steps` segments on `[0, horizon]`.
pub fn sample_path<R: Rng + ?Sized>(steps: usize, horizon: f64, rng: &mut R) -> Result<PolygonalPath> {
    if steps == 0 {
        return Err(Error::InvalidParameter("steps must be at least 1".into()));
    }
    if !(horizon > 0.0) {
        return Err(Error::InvalidParameter(format!("horizon must be positive, got {horizon}")));
    }
    let mut increments = vec![(0.0, 0.0); steps];
    sample_increments(rng, horizon / steps as f64, &mut increments);
    PolygonalPath::from_increments(&increments, horizon)
}

pub fn levy_area(path: &PolygonalPath) -> f64 {
    levy_area_of_increments(path.increments())
}

/// `½ Σ (X_i ΔY_i − Y_i ΔX_i)` for the path started at the origin.
pub fn levy_area_of_increments<S, I>(increments: I) -> S
where
    S: Num + Clone,
    I: IntoIterator<Item = (S, S)>,
{
    let (mut x, mut y) = (S::zero(), S::zero());
    let mut twice = S::zero();
    for (dx, dy) in increments {
        twice = twice + x.clone() * dy.clone() - y.clone() * dx.clone();
        x = x + dx;
        y = y + dy;
    }
    twice / (S::one() + S::one())
}
