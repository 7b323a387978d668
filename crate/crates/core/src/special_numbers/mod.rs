//! Euler, tangent and Eulerian numbers, single-cycle counts `c_{2r}`, and
//! the exponential-formula route to `u_{2m}`. Every integer sequence is
//! read off an exact rational power series.

mod cycles;
mod numbers;
pub mod series;

pub use cycles::{
    c2r_bruteforce, c2r_by_descents, partitions, single_cycle_exponential,
    single_cycle_from_sequence, u_from_exponential_formula, SingleCycleCount,
};
pub use numbers::{
    alternating_eulerian_sum, euler_number, euler_numbers, eulerian_numbers, tangent_number,
    tangent_numbers, IntegerSequence,
};
pub use series::Series;
