//! Polygonal Brownian paths, their Lévy area and truncated signatures, and
//! seeded Monte Carlo estimators built on them.

/// Default number of polygonal segments per path.
pub const DEFAULT_STEPS: usize = 256;

/// Default segments per path for the characteristic function at `T = 2π`,
/// where the discretisation bias at 256 steps is about 2 standard errors
/// at half a million samples.
pub const DEFAULT_CHARFN_STEPS: usize = 1024;

mod estimate;
mod path;
mod signature;

pub use estimate::{
    estimate_charfn, estimate_expected_signature, estimate_moments, CharfnEstimate, McConfig, McEstimate,
    RunningStats, SignatureEstimate,
};
pub use path::{levy_area, levy_area_of_increments, sample_increments, sample_path, PolygonalPath};
pub use signature::{
    area_from_signature, expected_signature, path_signature, polygonal_expected_signature, segment_signature,
    signature_of_increments, SegmentScratch, TruncatedSignature, MAX_LEVEL,
};
