//! Command-line front end: spec files, reports and the subcommands.

use std::path::PathBuf;

use clap::Args;

pub mod commands;
pub mod report;
pub mod spec;

/// Where the algebra comes from.
#[derive(Args, Clone)]
pub struct SourceArgs {
    /// TOML spec file.
    #[arg(long, conflicts_with = "preset")]
    pub spec: Option<PathBuf>,
    /// Preset with its default arguments: sl2, smith, woronowicz, conformal,
    /// down_up, or random.
    #[arg(long)]
    pub preset: Option<String>,
    /// Weight scheme, overriding the spec file: all-ones or deg-f.
    #[arg(long)]
    pub scheme: Option<String>,
    /// Seed for random parameters.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
