use clap::{Args, Parser, Subcommand, ValueEnum};
use levy_shuffle::moments::TimeScale;
use serde::Serialize;

use crate::output::Format;

/// Exact moments of Lévy area by shuffle algebra and matchings, with
/// Monte Carlo cross-checks.
#[derive(Debug, Parser)]
#[command(name = "levy-shuffle", version)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    /// Largest moment order (and half word length) for exact expansions.
    #[arg(long, env = "LEVY_SHUFFLE_MAX_N", default_value_t = 8, global = true)]
    pub max_n: usize,

    /// Largest signature level for Monte Carlo runs.
    #[arg(long, default_value_t = 4, global = true)]
    pub max_level: usize,

    /// Largest sample count for Monte Carlo runs.
    #[arg(long, default_value_t = 10_000_000, global = true)]
    pub max_samples: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact moments E[A_T^n] along every route.
    Moments(MomentsArgs),
    /// Cross-route identity checks.
    Verify(VerifyArgs),
    /// Monte Carlo estimates.
    Mc(McArgs),
    /// Euler, tangent and Eulerian number tables.
    Numbers(NumbersArgs),
    /// Enumerate the matchings of a word.
    Matchings(MatchingsArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct MomentsArgs {
    #[arg(long, default_value_t = 6)]
    pub n_max: usize,

    /// Time horizon, e.g. 1, 1/2, 2pi.
    #[arg(long = "T", alias = "time", default_value = "1")]
    #[serde(serialize_with = "display")]
    pub time: TimeScale,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Shuffle,
    Matchings,
    Numbers,
    All,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,

    /// Scale: words up to length 4m, moment orders up to 2m, r up to m.
    #[arg(long, default_value_t = 2)]
    pub m_max: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum McKind {
    Moments,
    Charfn,
    Signature,
}

#[derive(Debug, Args, Serialize)]
pub struct McArgs {
    #[arg(long, value_enum)]
    pub kind: McKind,

    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,

    /// Segments per path [default: 256, or 1024 for charfn]
    #[arg(long)]
    pub steps: Option<usize>,

    #[arg(long, default_value_t = 7)]
    pub seed: u64,

    /// Worker threads [default: available parallelism]
    #[arg(long)]
    pub workers: Option<usize>,

    /// Moment orders for --kind moments, comma separated [default: 2]
    #[arg(long, value_delimiter = ',')]
    pub n: Option<Vec<usize>>,

    /// Characteristic-function arguments for --kind charfn [default: 0.25]
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub z: Option<Vec<f64>>,

    /// Signature level for --kind signature [default: 2]
    #[arg(long)]
    pub level: Option<usize>,

    /// Time horizon for moments and signature; charfn always uses 2pi.
    #[arg(long = "T", alias = "time")]
    #[serde(serialize_with = "display_option")]
    pub time: Option<TimeScale>,

    /// Average each path with its reflection.
    #[arg(long)]
    pub antithetic: bool,
}

#[derive(Debug, Args, Serialize)]
#[group(required = true, multiple = false)]
pub struct Sequence {
    /// Euler numbers E_0 ..= E_count
    #[arg(long)]
    pub euler: bool,

    /// Tangent numbers T_1 ..= T_count
    #[arg(long)]
    pub tangent: bool,

    /// Row t of the Eulerian triangle
    #[arg(long, value_name = "T")]
    pub eulerian: Option<usize>,
}

#[derive(Debug, Args, Serialize)]
pub struct NumbersArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub sequence: Sequence,

    #[arg(long, default_value_t = 10)]
    pub count: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct MatchingsArgs {
    /// An xy-word such as xxyyxxyy, or an XY-word such as XYXYYX.
    #[arg(long)]
    pub word: String,

    /// Keep only matchings with this negativity.
    #[arg(long)]
    pub negativity: Option<usize>,

    /// Print the number of matchings only.
    #[arg(long)]
    pub count_only: bool,
}

fn display<S: serde::Serializer>(value: &TimeScale, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_string())
}

fn display_option<S: serde::Serializer>(value: &Option<TimeScale>, s: S) -> Result<S::Ok, S::Error> {
    match value {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}
