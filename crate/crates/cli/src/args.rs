use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "trace-lab", version, about = "Trace ideals, colons and isomorphisms in small commutative rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// A finite local algebra F_p[vars]/(relations) given by a JSON spec.
    Artinian(ArtinianArgs),
    /// A numerical semigroup ring given by generators.
    Semigroup(SemigroupArgs),
    /// Every ring of the built-in catalog, with verdicts checked against predictions.
    Catalog(Common),
}

#[derive(Debug, Args)]
pub struct ArtinianArgs {
    /// Ring spec file: {"kind":"artinian","field":p,"vars":[...],"relations":[...]}
    #[arg(long, value_name = "FILE")]
    pub spec: PathBuf,
    /// Generators of one ideal as comma-separated elements, e.g. `x,y^2`. Repeat for a second ideal.
    #[arg(long = "ideal-gens", value_name = "EXPR")]
    pub ideal_gens: Vec<String>,
    #[arg(long, value_enum)]
    pub op: Option<Op>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct SemigroupArgs {
    /// Ring spec file: {"kind":"semigroup","generators":[...]}
    #[arg(long, value_name = "FILE", conflicts_with = "gens", required_unless_present = "gens")]
    pub spec: Option<PathBuf>,
    /// Generators, e.g. `3,4`.
    #[arg(long, value_name = "LIST", value_delimiter = ',')]
    pub gens: Option<Vec<u64>>,
    /// Offsets generating one relative ideal, e.g. `0,5`. Repeat for a second ideal.
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    pub ideal: Vec<String>,
    #[arg(long, value_enum)]
    pub op: Option<Op>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
    /// Write the output here instead of standard output.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Largest algebra dimension whose ideals are enumerated.
    #[arg(long, value_name = "N")]
    pub cap_dim: Option<usize>,
    /// Largest gap count whose semigroup ideals are enumerated.
    #[arg(long, value_name = "N")]
    pub cap_gaps: Option<usize>,
    /// Isomorphism searches visit at most 2^N maps.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u32).range(0..128))]
    pub cap_hom: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Trace,
    Colon,
    Ann,
    Dual,
    Endo,
    Iso,
    Enumerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Lp,
    Identities,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
}
