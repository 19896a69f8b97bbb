use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use suppvar::kl::DEFAULT_MAX_LENGTH;
use suppvar::root_system::{Family, Level, Mode, RootSystem, Weight};
use suppvar::support::ModuleKind;

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "suppvar",
    version,
    about = "Support varieties and generic dimensions at roots of unity"
)]
pub struct Cli {
    /// Cartan type letter, A through G.
    #[arg(long = "type", value_name = "LETTER")]
    pub family: String,

    #[arg(long)]
    pub rank: usize,

    /// Order of the root of unity (or the prime in modular mode).
    #[arg(long)]
    pub ell: u32,

    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Quantum)]
    pub mode: ModeArg,

    /// Dominant weight as comma-separated fundamental-weight coordinates.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub weight: Option<String>,

    /// Sweep every dominant weight with coordinates at most this value.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub bound: Option<i64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Kazhdan-Lusztig cache file.
    #[arg(long, global = true, env = "SUPPVAR_CACHE")]
    pub cache: Option<PathBuf>,

    /// Longest element for which Kazhdan-Lusztig polynomials are computed.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_LENGTH)]
    pub max_kl_length: u32,

    /// Worker threads for sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,

    #[arg(long, global = true, value_enum, default_value_t = ModuleArg::Irreducible)]
    pub module: ModuleArg,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Support variety descriptor of a single weight.
    Support,
    /// Check the generic dimension identities over a weight sweep.
    Verify,
    /// Kazhdan-Lusztig polynomial of a pair of affine Weyl group elements.
    Kl {
        /// Generator word like `0,1,2`, or `theta=1,0;x=2,1`.
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        /// Generator labels of `I` for the parabolic polynomial.
        #[arg(long)]
        parabolic: Option<String>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Support => "support",
            Command::Verify => "verify",
            Command::Kl { .. } => "kl",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Quantum,
    Modular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModuleArg {
    Irreducible,
    Weyl,
}

/// Validated inputs shared by all commands.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub rs: RootSystem,
    pub level: Level,
    pub weight: Option<Weight>,
    pub bound: Option<i64>,
    pub format: Format,
    pub cache: Option<PathBuf>,
    pub max_kl_length: u32,
    pub jobs: usize,
    pub module: ModuleKind,
}

pub fn parse_weight(s: &str) -> Result<Weight, CliError> {
    let coords: Result<Vec<i64>, _> = s.split(',').map(|c| c.trim().parse::<i64>()).collect();
    coords
        .map(Weight)
        .map_err(|_| CliError::Input(format!("cannot parse weight {s:?}; expected e.g. 1,0,2")))
}

pub fn parse_labels(s: &str) -> Result<Vec<usize>, CliError> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|c| c.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Input(format!("cannot parse generator labels {s:?}")))
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<RunConfig, CliError> {
        let family =
            Family::parse(&cli.family).ok_or_else(|| suppvar::Error::InvalidCartanType {
                family: cli.family.clone(),
                rank: cli.rank,
            })?;
        let rs = RootSystem::build(family, cli.rank)?;
        let mode = match cli.mode {
            ModeArg::Quantum => Mode::Quantum,
            ModeArg::Modular => Mode::Modular,
        };
        let level = Level::new(&rs, cli.ell, mode)?;
        let weight = cli.weight.as_deref().map(parse_weight).transpose()?;
        if let Some(w) = &weight {
            rs.check_weight(w)?;
            if !w.is_dominant() {
                return Err(suppvar::Error::NotDominant(w.0.clone()).into());
            }
        }
        if let Some(b) = cli.bound {
            if b < 0 {
                return Err(CliError::Input(format!(
                    "sweep bound must be nonnegative, got {b}"
                )));
            }
        }
        if cli.jobs == 0 {
            return Err(CliError::Input("--jobs must be at least 1".into()));
        }
        if matches!(cli.command, Command::Support) && weight.is_none() {
            return Err(CliError::Input("support needs --weight".into()));
        }
        if matches!(cli.command, Command::Verify) && weight.is_some() && cli.bound.is_some() {
            return Err(CliError::Input(
                "give either --weight or --bound, not both".into(),
            ));
        }
        if cli.format == Format::Csv && !matches!(cli.command, Command::Verify) {
            return Err(CliError::Input(
                "csv output is only available for verify".into(),
            ));
        }
        let module = match cli.module {
            ModuleArg::Irreducible => ModuleKind::Irreducible,
            ModuleArg::Weyl => ModuleKind::Weyl,
        };
        Ok(RunConfig {
            rs,
            level,
            weight,
            bound: cli.bound,
            format: cli.format,
            cache: cli.cache.clone(),
            max_kl_length: cli.max_kl_length,
            jobs: cli.jobs,
            module,
        })
    }

    /// The sweep: the single weight if given, else all dominant weights with
    /// coordinates up to the bound (default `2 l - 1`).
    pub fn sweep(&self) -> Vec<Weight> {
        if let Some(w) = &self.weight {
            return vec![w.clone()];
        }
        let max = self.bound.unwrap_or(2 * self.level.ell() as i64 - 1);
        let mut out = vec![Vec::new()];
        for _ in 0..self.rs.rank() {
            out = out
                .into_iter()
                .flat_map(|v: Vec<i64>| (0..=max).map(move |c| [v.clone(), vec![c]].concat()))
                .collect();
        }
        out.into_iter().map(Weight).collect()
    }
}
