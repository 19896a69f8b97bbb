//! Command-line front end: argument validation, the `support`, `verify` and
//! `kl` commands, certificates, and the on-disk Kazhdan-Lusztig cache.

pub mod cache;
pub mod certificate;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;

use std::ffi::OsString;
use std::time::Instant;

use clap::Parser;
use suppvar::kl::KlTable;

use certificate::{CacheReport, Certificate, Inputs};
use config::{Cli, Command, RunConfig};
use error::{exit, CliError};

/// What a run writes and how the process should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn error_outcome(e: &CliError, stderr: String) -> Outcome {
    let mut stdout = serde_json::to_string_pretty(&e.report()).unwrap_or_else(|_| e.to_string());
    stdout.push('\n');
    Outcome {
        stdout,
        stderr,
        code: e.exit_code(),
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(
                e.kind(),
                ErrorKind::DisplayHelp
                    | ErrorKind::DisplayVersion
                    | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
            ) {
                return Outcome {
                    stdout: e.to_string(),
                    stderr: String::new(),
                    code: exit::PASS,
                };
            }
            let msg = e.render().to_string();
            let err = CliError::Input(
                msg.lines()
                    .next()
                    .unwrap_or("")
                    .trim_start_matches("error: ")
                    .to_string(),
            );
            return error_outcome(&err, msg);
        }
    };
    let echo: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let mut warnings = Vec::new();
    let result = execute(&cli, echo, &mut warnings);
    let stderr: String = warnings.iter().map(|w| format!("warning: {w}\n")).collect();
    match result {
        Ok((cert, format)) => match output::render(&cert, format) {
            Ok(stdout) => Outcome {
                stdout,
                stderr,
                code: cert.verdict.exit_code(),
            },
            Err(e) => error_outcome(&e, stderr),
        },
        Err(e) => error_outcome(&e, stderr),
    }
}

fn execute(
    cli: &Cli,
    echo: Vec<String>,
    warnings: &mut Vec<String>,
) -> Result<(Certificate, config::Format), CliError> {
    let start = Instant::now();
    let cfg = RunConfig::from_cli(cli)?;
    let ct = cfg.rs.cartan_type();
    let inputs = Inputs {
        family: ct.family.to_string(),
        rank: ct.rank,
        ell: cfg.level.ell(),
        mode: commands::mode_name(cfg.level.mode()).into(),
        weight: cfg.weight.as_ref().map(|w| w.0.clone()),
        bound: cfg.bound,
        format: cfg.format,
        max_kl_length: cfg.max_kl_length,
        jobs: cfg.jobs,
        module: commands::module_name(cfg.module).into(),
    };

    let uses_kl = !matches!(cli.command, Command::Support);
    let mut table = KlTable::with_max_length(&cfg.rs, cfg.level.ell(), cfg.max_kl_length);
    let loaded = match (&cfg.cache, uses_kl) {
        (Some(path), true) => cache::load(path, &mut table, warnings),
        _ => 0,
    };

    let (outputs, verdict, table) = match &cli.command {
        Command::Support => {
            let (o, v) = commands::cmd_support(&cfg)?;
            (o, v, table)
        }
        Command::Verify => commands::cmd_verify(&cfg, table)?,
        Command::Kl { y, w, parabolic } => {
            let (o, v) = commands::cmd_kl(&cfg, &mut table, y, w, parabolic.as_deref())?;
            (o, v, table)
        }
    };

    let total = table.stats().columns;
    let report = CacheReport {
        columns_total: total,
        columns_loaded: loaded,
        columns_computed: total - loaded,
    };
    if let (Some(path), true) = (&cfg.cache, report.columns_computed > 0) {
        if let Err(e) = cache::save(path, &table) {
            warnings.push(format!("could not write cache: {e}"));
        }
    }

    let cert = Certificate {
        command: echo,
        subcommand: cli.command.name().into(),
        inputs,
        outputs,
        verdict,
        version: env!("CARGO_PKG_VERSION").into(),
        cache: report,
        timing_ms: start.elapsed().as_millis() as u64,
    };
    Ok((cert, cfg.format))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_drives_exit_code() {
        let out = run([
            "suppvar", "--type", "A", "--rank", "1", "--ell", "5", "--bound", "0", "verify",
        ]);
        assert_eq!(out.code, 0, "{}", out.stdout);
        let out = run([
            "suppvar",
            "--type",
            "A",
            "--rank",
            "1",
            "--ell",
            "5",
            "--max-kl-length",
            "0",
            "--bound",
            "6",
            "verify",
        ]);
        assert_eq!(out.code, 3, "{}", out.stdout);
        assert!(out.stdout.contains("\"complete\": false"));
    }

    #[test]
    fn parse_errors_are_json() {
        let out = run(["suppvar", "--rank", "1", "support"]);
        assert_eq!(out.code, 2);
        let v: error::ErrorReport = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v.error.kind, "invalid_input");
        assert_eq!(run(["suppvar", "--help"]).code, 0);
    }

    #[test]
    fn csv_only_for_sweeps() {
        let out = run([
            "suppvar", "--type", "A", "--rank", "1", "--ell", "5", "--weight", "1", "--format",
            "csv", "support",
        ]);
        assert_eq!(out.code, 2);
    }
}
