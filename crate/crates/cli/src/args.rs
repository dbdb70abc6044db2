use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

#[derive(Debug, Parser)]
#[command(
    name = "wronski",
    version,
    about = "Exact zero counts for Wronskians of orthogonal polynomials"
)]
pub struct Cli {
    /// Worker threads for sweeps.
    #[arg(long, global = true, env = "WRONSKI_JOBS")]
    pub jobs: Option<usize>,

    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Report format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyName {
    Hermite,
    Laguerre,
    Jacobi,
    Moments,
}

#[derive(Clone, Debug, Default, Args)]
pub struct FamilyArgs {
    /// Polynomial family.
    #[arg(long, value_enum)]
    pub family: Option<FamilyName>,

    /// Laguerre or Jacobi parameter α, as "p/q".
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,

    /// Jacobi parameter β, as "p/q".
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,

    /// JSON array of "p/q" moment strings (implies --family moments).
    #[arg(long)]
    pub moments: Option<PathBuf>,

    /// Support of the moment functional, "lo,hi" ("inf" allowed).
    #[arg(long, allow_hyphen_values = true)]
    pub support: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the predicted zero count for one partition.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Nondecreasing parts "1,3", or degrees "k=1,4".
        #[arg(long)]
        partition: String,
        /// Number of degeneracy probes (smallest indices absent from the multi-index).
        #[arg(long)]
        probes: Option<usize>,
    },
    /// Verify every partition up to a weight and length bound.
    Sweep(SweepArgs),
    /// Real and imaginary roots of the Hermite Wronskian of a doubled partition.
    Felder {
        /// Strictly increasing positive integers, e.g. "1,3".
        #[arg(long)]
        mu: String,
    },
    /// Compare the Hermite Wronskian of the conjugate partition with the rotated one.
    Duality {
        #[arg(long)]
        partition: String,
    },
    /// Roots of Wr[P_n, …, P_{n+ℓ-1}] and interlacing with the next shift.
    Karlin {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
    },
    /// Verify a partition for the orthogonal polynomials of a moment sequence.
    Moments {
        /// JSON array of "p/q" moment strings.
        #[arg(long = "moments", value_name = "FILE")]
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        support: Option<String>,
        #[arg(long)]
        partition: String,
        #[arg(long)]
        probes: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Largest |λ|.
    #[arg(long)]
    pub max_weight: Option<usize>,
    /// Largest number of parts ℓ (defaults to the weight bound).
    #[arg(long)]
    pub max_length: Option<usize>,
    #[arg(long)]
    pub probes: Option<usize>,
    /// JSON file with the same keys as the flags; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// Contents of a `--config` file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepFile {
    pub family: Option<FamilyName>,
    pub alpha: Option<String>,
    pub beta: Option<String>,
    pub moments: Option<PathBuf>,
    pub support: Option<String>,
    pub max_weight: Option<usize>,
    pub max_length: Option<usize>,
    pub probes: Option<usize>,
    pub output: Option<PathBuf>,
    pub format: Option<Format>,
    pub jobs: Option<usize>,
}
