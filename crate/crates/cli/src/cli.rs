use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "ncomp", version, about = "Higher-rank numerical ranges and normal compressions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Matrix or spectrum JSON file.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Inline spectrum "re,im;re,im;...".
    #[arg(long, allow_hyphen_values = true)]
    pub spectrum: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Check tolerance (defaults depend on the subcommand).
    #[arg(long)]
    pub tol: Option<f64>,
    /// Output directory.
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
    /// Comma-separated output formats.
    #[arg(long, default_value = "csv,svg")]
    pub emit: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Lisze,
    Normal,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Refine {
    None,
    Adaptive,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank-k numerical range.
    Lambda {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Method::Lisze)]
        method: Method,
        #[arg(long, default_value_t = 4096)]
        theta_steps: usize,
        #[arg(long, value_enum, default_value_t = Refine::Adaptive)]
        refine: Refine,
    },
    /// The set B(a) of partners b of a, exact where known plus samples.
    Bset {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// A frame compressing diag(z) to diag(a, b), or verify a given one.
    Witness {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Verify this frame JSON instead of constructing one.
        #[arg(long)]
        frame: Option<PathBuf>,
    },
    /// Hausdorff estimates between B(a) and B(a_n) along a path.
    Continuity {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// "geom:DX,DY:COUNT[:RATIO]" (a + d * ratio^i) or "list:x,y;x,y;...".
        #[arg(long, allow_hyphen_values = true)]
        path: String,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Numerical ranges of random 2x2 compressions with eigenvalue a.
    Ellipses {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}
