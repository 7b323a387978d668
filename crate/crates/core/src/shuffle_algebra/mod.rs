//! Exact arithmetic in the free tensor algebra on the letters `x` and `y`.
//!
//! Basis tensors are [`Word`]s; general elements are [`TensorPoly`]s with
//! exact rational coefficients. Dual and primal tensors share one
//! representation and meet only in [`pairing`].

mod poly;
pub mod rational;
mod shuffle;
mod word;

pub use poly::TensorPoly;
pub use rational::Rational;
pub use shuffle::{
    apply_shuffle, area_tensor, diagonal_tensor, enumerate_shuffles, pairing, shuffle,
    shuffle_by_permutations, shuffle_counts, shuffle_poly, shuffle_power, tensor_power_diag,
};
pub use word::{concat, Letter, Word};
