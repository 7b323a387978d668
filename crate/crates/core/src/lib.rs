//! Moments of planar Lévy area computed exactly by several independent
//! combinatorial routes, plus a Monte Carlo simulator to check them.
//!
//! - [`shuffle_algebra`]: words, sparse tensors with rational coefficients,
//!   the shuffle product and the duality pairing.
//! - [`matchings`]: xy- and XY-matchings, their signs, and expansions of
//!   shuffle products.
//! - [`special_numbers`]: Euler, tangent and Eulerian numbers, single-cycle
//!   counts and the exponential-formula assembly.
//! - [`moments`]: the end-to-end exact moment pipeline.
//! - [`brownian_sim`]: polygonal Brownian paths, signatures and estimators.

pub mod brownian_sim;
pub mod error;
pub mod matchings;
pub mod moments;
pub mod shuffle_algebra;
pub mod special_numbers;

pub use error::{Error, Result};
