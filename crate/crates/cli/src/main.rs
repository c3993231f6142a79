mod args;
mod commands;
mod table;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;

use args::{Cli, Format};

const THREADS_ENV: &str = "SPHERE_OSC_THREADS";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(sphere_osc_core::Error),
    Io(anyhow::Error),
}

impl From<sphere_osc_core::Error> for CliError {
    fn from(e: sphere_osc_core::Error) -> Self {
        CliError::Domain(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io(_) => 3,
        }
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|n| *n > 0)
        .ok_or_else(|| CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Io(anyhow::anyhow!(e).context("thread pool setup failed")))
}

fn write_output(cli: &Cli, outcome: &commands::Outcome) -> Result<(), CliError> {
    let mut sink: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path)
                .with_context(|| format!("cannot create {}", path.display()))
                .map_err(CliError::Io)?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let written = match cli.format {
        Format::Csv => outcome.table.write_csv(&mut sink),
        Format::Json => outcome.table.write_json(&commands::echo(&cli.command), &mut sink),
    };
    written
        .and_then(|_| sink.flush())
        .context("writing output")
        .map_err(CliError::Io)
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    configure_threads()?;
    let outcome = commands::run(&cli.command)?;
    write_output(cli, &outcome)?;
    Ok(outcome.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("sphere-osc: checks failed");
            ExitCode::from(1)
        }
        Err(e) => {
            match &e {
                CliError::Usage(msg) => eprintln!("sphere-osc: usage: {msg}"),
                CliError::Domain(err) => eprintln!("sphere-osc: {err}"),
                CliError::Io(err) => eprintln!("sphere-osc: {err:#}"),
            }
            ExitCode::from(e.exit_code())
        }
    }
}
