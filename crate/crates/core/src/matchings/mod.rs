//! Signed matchings that count coefficients of shuffle powers.
//!
//! Indexing: `(xy − yx)^{⧢n}` produces words of length `2n`. An
//! xy-matching of such a word has `n` arcs; in
//! `(xy)^{⧢s} ⧢ (yx)^{⧢t}` we have `s + t = n`. An XY-matching for the
//! same even word has word length `n` and its permutation acts on all `n`
//! positions.

mod block;
mod expansion;
pub mod perm;
mod xy;

pub use block::{
    block_matchings_over, block_word_string, coefficient_by_block_matchings,
    enumerate_block_matchings, for_each_block_matching, for_each_block_matching_on,
    parse_block_word, u_by_block_matchings, BlockMatching,
};
pub use expansion::{
    canonical_expansion, enumerate_expansions, matching_from_expansion, Expansion, Factor, Label,
};
pub use xy::{
    coefficient_by_xy, coefficient_even_word, count_with_negativity, enumerate_xy_matchings,
    negativity_distribution, u_by_xy, XyMatching,
};
