use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "zetalab",
    version,
    about = "Odd zeta values, Eisenstein transformation checks and period polynomial roots"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Target decimal digits (10..=10000).
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u32).range(10..=10000))]
    pub digits: u32,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate zeta at integers, e.g. `--s 3..11`.
    Zeta {
        #[arg(long, default_value = "3")]
        s: String,
        #[command(flatten)]
        common: Common,
    },
    /// Verify a registered identity over a parameter grid.
    Verify(VerifyArgs),
    /// Locate roots of a polynomial family and report unimodularity.
    Roots(RootsArgs),
    /// Sweep generalized Ramanujan polynomials over character pairs.
    Conjecture(ConjectureArgs),
    /// List the identity registry.
    List {
        /// Emit JSON instead of a table.
        #[arg(long)]
        json: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity id, or `all` for every id at default parameters.
    #[arg(long)]
    pub id: String,
    /// Integer parameter `n`; a value, list `1,2` or range `1..4`.
    #[arg(long)]
    pub n: Option<String>,
    /// Integer parameter `m`; a value, list or range.
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<String>,
    /// Real expression such as `pi/2`; several may be given as a list `pi/4;pi;3`.
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub w: Option<String>,
    #[arg(long)]
    pub x: Option<String>,
    #[arg(long)]
    pub y: Option<String>,
    /// Complex point such as `0.5+1i`.
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<String>,
    /// Rational `p/q` or decimal.
    #[arg(long, allow_hyphen_values = true)]
    pub r1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub r2: Option<String>,
    /// `a,b,c,d` with `ad - bc = 1`, `c > 0`.
    #[arg(long, allow_hyphen_values = true)]
    pub matrix: Option<String>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct RootsArgs {
    /// ramanujan, full, pm, pm_odd or generalized.
    #[arg(long, default_value = "ramanujan")]
    pub family: String,
    /// Index range, e.g. `1..10`.
    #[arg(long, default_value = "1")]
    pub m: String,
    /// Weight range for the generalized family.
    #[arg(long, default_value = "4")]
    pub k: String,
    #[command(flatten)]
    pub chars: CharacterArgs,
    /// Unit-circle tolerance as a base-10 exponent; defaults to -30 for
    /// ramanujan and -25 otherwise.
    #[arg(long, allow_hyphen_values = true)]
    pub log10_tol: Option<i64>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    /// Largest character modulus in the sweep.
    #[arg(long, default_value_t = 12)]
    pub max_modulus: u64,
    #[arg(long, default_value = "2..8")]
    pub k: String,
    #[command(flatten)]
    pub chars: CharacterArgs,
    #[arg(long, default_value_t = -25, allow_hyphen_values = true)]
    pub log10_tol: i64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct CharacterArgs {
    /// JSON `{"modulus": L, "values": [...]}` for chi.
    #[arg(long)]
    pub chi_file: Option<PathBuf>,
    #[arg(long)]
    pub psi_file: Option<PathBuf>,
    /// `M` of the generalized polynomial; defaults to the modulus of psi.
    #[arg(long = "modulus-M", visible_alias = "modulus-m")]
    pub modulus_m: Option<u64>,
}
