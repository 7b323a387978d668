//! Exact moments `E[A^n]` of the Lévy area at time 1 (and at scaled
//! times), computed along independent routes:
//!
//! - contraction: `2^{−2n}/n! · ⟨(xy − yx)^{⧢n}, (xx + yy)^{⊗n}⟩`
//! - xy-matchings: `2^{−2n}/n! · u_n` with `u_n` summed word by word
//! - XY/exponential: `u_{2m}` from single-cycle counts
//! - closed form: `2^{−n}·E_n`

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matchings::u_by_xy;
use crate::shuffle_algebra::rational::{factorial, integer, parse_rational, pow, to_display_string, to_ratio_string, Rational};
use crate::shuffle_algebra::{area_tensor, pairing, shuffle_power, tensor_power_diag, Word};
use crate::special_numbers::{euler_number, u_from_exponential_formula, Series};

/// Largest `n` the contraction route expands without an explicit override.
pub const DEFAULT_MAX_N: usize = 8;

fn guard(n: usize, max_n: usize) -> Result<()> {
    if n > max_n {
        return Err(Error::LimitExceeded {
            what: "moment order",
            requested: n,
            limit: max_n,
        });
    }
    Ok(())
}

fn normalise_u(u: BigInt, n: usize) -> Rational {
    integer(u) / (integer(factorial(n as u32)) * integer(BigInt::one() << (2 * n)))
}

/// `⟨(xy − yx)^{⧢n}, (xx + yy)^{⊗n}⟩`, i.e. `u_n` read off the full
/// shuffle-power expansion.
pub fn contraction_u(n: usize, max_n: usize) -> Result<Rational> {
    guard(n, max_n)?;
    Ok(pairing(&shuffle_power(&area_tensor(), n), &tensor_power_diag(n)))
}

pub fn moment_by_contraction(n: usize) -> Result<Rational> {
    moment_by_contraction_limited(n, DEFAULT_MAX_N)
}

pub fn moment_by_contraction_limited(n: usize, max_n: usize) -> Result<Rational> {
    let u = contraction_u(n, max_n)?;
    Ok(u / (integer(factorial(n as u32)) * integer(BigInt::one() << (2 * n))))
}

/// Doubled words `z_1²…z_n²` with unequal letter counts whose coefficient in
/// `(xy − yx)^{⧢n}` is nonzero. Always empty; exposed for verification.
pub fn unbalanced_doubled_survivors(n: usize, max_n: usize) -> Result<Vec<Word>> {
    guard(n, max_n)?;
    let power = shuffle_power(&area_tensor(), n);
    Ok(tensor_power_diag(n)
        .iter()
        .map(|(w, _)| *w)
        .filter(|w| !w.is_even() && !power.coeff(w).is_zero())
        .collect())
}

pub fn moment_by_xy_matchings(n: usize) -> Rational {
    normalise_u(u_by_xy(n), n)
}

/// Zero for odd `n` (there are no XY-words of odd length with balanced
/// letters).
pub fn moment_by_exponential_formula(n: usize) -> Rational {
    if n % 2 == 1 {
        return Rational::zero();
    }
    normalise_u(u_from_exponential_formula(n / 2), n)
}

/// `2^{−n}·E_n`
pub fn moment_closed_form(n: usize) -> Rational {
    integer(euler_number(n)) / integer(BigInt::one() << n)
}

/// A positive time horizon `factor·π^{pi_power}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimeScale {
    pub factor: Rational,
    pub pi_power: u32,
}

impl TimeScale {
    pub fn new(factor: Rational, pi_power: u32) -> Result<Self> {
        if !factor.is_positive() {
            return Err(Error::InvalidParameter(format!("time horizon must be positive, got {factor}")));
        }
        Ok(TimeScale { factor, pi_power })
    }

    pub fn unit() -> Self {
        TimeScale {
            factor: Rational::one(),
            pi_power: 0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.factor.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI.powi(self.pi_power as i32)
    }
}

impl fmt::Display for TimeScale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factor = to_display_string(&self.factor);
        match self.pi_power {
            0 => write!(f, "{factor}"),
            1 => write!(f, "{factor}pi"),
            k => write!(f, "{factor}pi^{k}"),
        }
    }
}

/// Accepts `2`, `1/2`, `pi`, `2pi`, `3/2pi`, `pi^2`, `2*pi`.
impl FromStr for TimeScale {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        let text = text.to_lowercase();
        let (factor, pi_power) = match text.find("pi") {
            None => (text.as_str(), 0),
            Some(at) => {
                let power = match &text[at + 2..] {
                    "" => 1,
                    rest => rest
                        .strip_prefix('^')
                        .and_then(|p| p.parse().ok())
                        .ok_or_else(|| Error::InvalidParameter(format!("cannot parse time {s:?}")))?,
                };
                (&text[..at], power)
            }
        };
        let factor = if factor.is_empty() {
            Rational::one()
        } else {
            parse_rational(factor)?
        };
        TimeScale::new(factor, pi_power)
    }
}

/// `E[A_T^n]` as an exact `coefficient·π^{pi_power}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledMoment {
    pub coefficient: Rational,
    pub pi_power: u32,
}

/// `E[A_T^n] = T^n·2^{−n}·E_n`, using `A_T = T·A_1`.
pub fn moment_scaled(n: usize, time: &TimeScale) -> ScaledMoment {
    ScaledMoment {
        coefficient: pow(&time.factor, n as u32) * moment_closed_form(n),
        pi_power: time.pi_power * n as u32,
    }
}

/// Partial sum `Σ_{n≤N} π^n E_n (iz)^n / n!` of the characteristic
/// function of `A_{2π}`; real because odd terms vanish. Converges for
/// `|z| < 1/2`; outside that range a warning is logged.
pub fn charfn_partial_sum(z: f64, max_order: usize) -> f64 {
    if z.abs() >= 0.5 {
        log::warn!("charfn partial sums diverge for |z| >= 1/2 (z = {z})");
    }
    let sec = Series::cos(max_order + 1).reciprocal();
    let pi_z = std::f64::consts::PI * z;
    (0..=max_order)
        .step_by(2)
        .map(|n| {
            // (iz)^n = (−1)^{n/2} z^n for even n
            let sign = if (n / 2) % 2 == 0 { 1.0 } else { -1.0 };
            let coeff = sec.coeff(n).to_f64().expect("finite series coefficient");
            sign * coeff * pi_z.powi(n as i32)
        })
        .sum()
}

/// `sech(πz)`
pub fn charfn_reference(z: f64) -> f64 {
    1.0 / (std::f64::consts::PI * z).cosh()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Routes {
    pub contraction: Option<Rational>,
    pub xy_matching: Option<Rational>,
    pub xy_exponential: Rational,
    pub closed_form: Rational,
}

impl Routes {
    fn all(&self) -> impl Iterator<Item = &Rational> {
        self.contraction
            .iter()
            .chain(self.xy_matching.iter())
            .chain([&self.xy_exponential, &self.closed_form])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentReport {
    pub n: usize,
    pub value: Rational,
    pub pi_power: u32,
    pub routes: Routes,
    pub agreement: bool,
}

impl MomentReport {
    /// Every route at `T = 1`. The contraction and xy-matching routes are
    /// skipped (and reported as absent) when `n > max_n`.
    pub fn compute(n: usize, max_n: usize) -> MomentReport {
        let routes = Routes {
            contraction: moment_by_contraction_limited(n, max_n).ok(),
            xy_matching: (n <= max_n).then(|| moment_by_xy_matchings(n)),
            xy_exponential: moment_by_exponential_formula(n),
            closed_form: moment_closed_form(n),
        };
        let value = routes.closed_form.clone();
        let agreement = routes.all().all(|r| *r == value);
        MomentReport {
            n,
            value,
            pi_power: 0,
            routes,
            agreement,
        }
    }

    /// The same report for `A_T`, multiplying every route by `T^n`.
    pub fn scaled(&self, time: &TimeScale) -> MomentReport {
        let factor = pow(&time.factor, self.n as u32);
        let scale = |r: &Rational| r * &factor;
        MomentReport {
            n: self.n,
            value: scale(&self.value),
            pi_power: self.pi_power + time.pi_power * self.n as u32,
            routes: Routes {
                contraction: self.routes.contraction.as_ref().map(scale),
                xy_matching: self.routes.xy_matching.as_ref().map(scale),
                xy_exponential: scale(&self.routes.xy_exponential),
                closed_form: scale(&self.routes.closed_form),
            },
            agreement: self.agreement,
        }
    }
}

/// `{"n":…, "exact":"p/q", "routes":{…}, "agreement":true, "pi_power":k}`
impl Serialize for MomentReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct RoutesJson<'a>(&'a Routes);

        impl Serialize for RoutesJson<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(None)?;
                if let Some(c) = &self.0.contraction {
                    map.serialize_entry("contraction", &to_ratio_string(c))?;
                }
                if let Some(c) = &self.0.xy_matching {
                    map.serialize_entry("xy_matching", &to_ratio_string(c))?;
                }
                map.serialize_entry("XY_exponential", &to_ratio_string(&self.0.xy_exponential))?;
                map.serialize_entry("closed_form", &to_ratio_string(&self.0.closed_form))?;
                map.end()
            }
        }

        let mut map = serializer.serialize_map(Some(5))?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("exact", &to_ratio_string(&self.value))?;
        map.serialize_entry("routes", &RoutesJson(&self.routes))?;
        map.serialize_entry("agreement", &self.agreement)?;
        map.serialize_entry("pi_power", &self.pi_power)?;
        map.end()
    }
}
