//! Argument parsing and the top-level `run`.

use std::path::PathBuf;

use clap::Parser;

use crate::config::{Overrides, Settings};
use crate::error::Result;
use crate::pipeline::{self, RunSummary, Stage};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Stats,
    Regress,
    Spectrum,
    Arma,
    Forecast,
    Factor,
    Fractal,
    /// Every stage, into one report
    All,
}

impl Command {
    pub fn stages(self) -> Vec<Stage> {
        match self {
            Command::Stats => vec![Stage::Stats],
            Command::Regress => vec![Stage::Regress],
            Command::Spectrum => vec![Stage::Spectrum],
            Command::Arma => vec![Stage::Arma],
            Command::Forecast => vec![Stage::Forecast],
            Command::Factor => vec![Stage::Factor],
            Command::Fractal => vec![Stage::Fractal],
            Command::All => Stage::ALL.to_vec(),
        }
    }
}

/// Statistical, spectral and structural analysis of daily arrival counts.
#[derive(Debug, Parser)]
#[command(name = "influx", version)]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// TOML file with defaults for any flag (kebab-case keys)
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[command(flatten)]
    pub overrides: Overrides,
}

impl Cli {
    pub fn settings(&self) -> Result<Settings> {
        let file = match &self.config {
            Some(path) => Overrides::load(path)?,
            None => Overrides::default(),
        };
        Settings::resolve(self.overrides.clone().or(file))
    }
}

pub fn run(cli: &Cli) -> Result<RunSummary> {
    let settings = cli.settings()?;
    pipeline::run(&cli.command.stages(), &settings)
}
