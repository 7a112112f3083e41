//! Command-line front end for the `hombound` library.

pub mod commands;
pub mod config;
pub mod error;
pub mod input;
pub mod report;

use std::ffi::OsString;
use std::fs;

use clap::Parser;
use hombound::Limits;

use crate::config::{Args, Command, RunConfig};
use crate::error::{CliError, ExitKind};
use crate::report::{config_echo, Envelope};

/// Runs the named command and builds its report. The error, if any, carries
/// the exit status; a lemma violation is not an error here.
pub fn run(cfg: &RunConfig) -> Result<Envelope, CliError> {
    let limits = Limits::new(cfg.guard).map_err(|e| CliError::usage(e.to_string()))?;
    let hs = input::collect(&cfg.h_graph6, cfg.h_file.as_deref(), None, cfg.seed)?;
    let gs = input::collect(
        &cfg.g_graph6,
        cfg.g_file.as_deref(),
        cfg.random.as_ref(),
        cfg.seed,
    )?;
    let out = match cfg.command {
        Command::Hom => commands::hom(cfg, &limits, &hs, &gs)?,
        Command::Density => commands::density(cfg, &limits, &hs, &gs)?,
        Command::CheckSidorenko => commands::check_sidorenko(cfg, &limits, &hs, &gs)?,
        Command::Drc => commands::drc(cfg, &limits, &gs)?,
        Command::EmbedVerify => commands::embed_verify(cfg, &limits, &hs, &gs)?,
        Command::Tensor => commands::tensor(cfg, &limits, &hs, &gs)?,
        Command::Search => commands::search(cfg, &limits, &gs)?,
    };
    let generated_at = (!cfg.no_timestamp)
        .then(|| chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true));
    Ok(Envelope {
        command: cfg.command.name().to_string(),
        config: config_echo(cfg),
        generated_at,
        records: out.records,
        summary: out.summary,
    })
}

fn emit(cfg: &RunConfig, envelope: &Envelope) -> Result<(), CliError> {
    let text = envelope.render(cfg.format)?;
    match &cfg.out {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Parses `args` (program name first), runs, writes the report and returns
/// the process exit status.
pub fn run_from_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitKind::Usage as u8
            } else {
                0
            };
        }
    };
    let result = RunConfig::from_args(args).and_then(|cfg| {
        let envelope = run(&cfg)?;
        emit(&cfg, &envelope)?;
        match envelope.records.iter().find(|r| r.violation) {
            Some(r) => Err(CliError {
                kind: ExitKind::Violation,
                message: format!("lemma violation at {}", r.id),
            }),
            None => Ok(()),
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("hombound: {e}");
            e.code()
        }
    }
}
