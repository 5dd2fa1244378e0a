//! Command-line surface and the validated run configuration.

use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gapset_core::enumeration::TREE_GENUS_LIMIT;
use gapset_core::DEFAULT_GENUS_CAP;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "gapset",
    version,
    about = "Count, list and check numerical semigroups through their gapsets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Clone, Debug, Args)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads; 0 picks one per core.
    #[arg(long, default_value_t = 0, global = true)]
    pub jobs: usize,

    /// Largest genus any command may reach.
    #[arg(long, env = "GAPSET_GENUS_CAP", default_value_t = DEFAULT_GENUS_CAP, global = true)]
    pub genus_cap: u32,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Tables of n_g, n'_g and n_{g,m}.
    Count {
        #[arg(long)]
        max_genus: u32,
        /// Only the row of this multiplicity.
        #[arg(long, conflicts_with = "max_multiplicity")]
        multiplicity: Option<u32>,
        /// Rows m = 1..=M of the table; defaults to max-genus + 1.
        #[arg(long)]
        max_multiplicity: Option<u32>,
    },
    /// List the gapsets of one genus, or the gapset filtrations of one
    /// genus and multiplicity.
    Enumerate {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        multiplicity: Option<u32>,
    },
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        check: Check,
    },
    /// Kunz coordinates of a gapset.
    Kunz {
        /// Comma-separated gaps; an empty string is the semigroup N.
        #[arg(long, allow_hyphen_values = true)]
        gaps: String,
    },
}

#[derive(Clone, Debug, Subcommand)]
pub enum Check {
    /// Admissibility criterion against the brute-force gapset test.
    Criterion {
        #[arg(long, default_value_t = 6)]
        max_m: u32,
        #[arg(long, default_value_t = 8)]
        max_sum: u32,
    },
    /// Genus-increasing injections for multiplicity 3 or 4.
    Injection {
        #[arg(long)]
        multiplicity: u32,
        #[arg(long)]
        max_genus: u32,
    },
    /// Recompute the published tables and compare cell by cell.
    Golden,
}

/// A parsed command with limits checked.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub jobs: usize,
    pub genus_cap: u32,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self> {
        let GlobalArgs {
            format,
            out,
            jobs,
            genus_cap,
        } = cli.global;
        let cfg = RunConfig {
            command: cli.command,
            format,
            out,
            jobs,
            genus_cap,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.genus_cap > TREE_GENUS_LIMIT {
            bail!(
                "genus cap {} exceeds the supported limit {TREE_GENUS_LIMIT}",
                self.genus_cap
            );
        }
        if let Some(g) = self.requested_genus() {
            if g > self.genus_cap {
                bail!(
                    "genus {g} is above the cap {} (raise it with --genus-cap or GAPSET_GENUS_CAP)",
                    self.genus_cap
                );
            }
        }
        match &self.command {
            Command::Count {
                multiplicity: Some(m),
                ..
            }
            | Command::Enumerate {
                multiplicity: Some(m),
                ..
            } => check_multiplicity(*m)?,
            Command::Count {
                max_multiplicity: Some(m),
                ..
            } => check_multiplicity(*m)?,
            Command::Verify {
                check: Check::Injection { multiplicity, .. },
            } if !matches!(multiplicity, 3 | 4) => {
                bail!("injections exist for multiplicity 3 and 4 only, got {multiplicity}")
            }
            Command::Verify {
                check: Check::Criterion { max_m, .. },
            } if *max_m > 10 => {
                bail!("--max-m {max_m} would iterate over {max_m}! orderings; use at most 10")
            }
            _ => {}
        }
        Ok(())
    }

    fn requested_genus(&self) -> Option<u32> {
        match &self.command {
            Command::Count { max_genus, .. } => Some(*max_genus),
            Command::Enumerate { genus, .. } => Some(*genus),
            Command::Verify {
                check: Check::Injection { max_genus, .. },
            } => Some(*max_genus),
            Command::Verify {
                check: Check::Criterion { max_sum, .. },
            } => Some(*max_sum),
            Command::Verify {
                check: Check::Golden,
            } => Some(crate::golden::MAX_GENUS),
            Command::Kunz { .. } => None,
        }
    }
}

fn check_multiplicity(m: u32) -> Result<()> {
    if m == 0 || m > gapset_core::MAX_MULTIPLICITY {
        bail!(
            "multiplicity must lie in 1..={}, got {m}",
            gapset_core::MAX_MULTIPLICITY
        );
    }
    Ok(())
}
