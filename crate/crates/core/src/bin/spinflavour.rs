use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use spinflavour::error::Error;
use spinflavour::scenario::{self, OutputFormat, ScenarioConfig};
use spinflavour::validation::{self, ValidationOptions};

/// Spin-flavour neutrino evolution under a stochastic magnetic field.
///
/// Exit codes: 0 success, 2 configuration error, 3 invariant violation,
/// failed validation or output error.
#[derive(Parser)]
#[command(name = "spinflavour", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve a scenario and write the entropy time series.
    Simulate {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value = "timeseries.csv")]
        out: PathBuf,
        /// Overrides `output_format` from the config.
        #[arg(long)]
        format: Option<OutputFormat>,
    },
    /// Write the seven figure datasets fig1.csv … fig7.csv.
    Figures {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value = "figures")]
        outdir: PathBuf,
    },
    /// Run the acceptance checks and print one line per check.
    Validate {
        #[arg(long)]
        quick: bool,
        #[arg(long, hide = true)]
        inject_sign_error: bool,
    },
    /// Print the reduced parameters and derived quantities as JSON.
    PrintParams {
        #[arg(long)]
        config: Option<PathBuf>,
    },
}

fn load(path: &Option<PathBuf>) -> Result<ScenarioConfig, Error> {
    match path {
        Some(p) => ScenarioConfig::load(p),
        None => Ok(ScenarioConfig::reference()),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Config(_) | Error::Json(_) | Error::Domain(_) | Error::InvalidGrid(_) | Error::InvalidMeasurement(_) => 2,
        _ => 3,
    }
}

fn execute(cmd: Command) -> Result<u8, Error> {
    match cmd {
        Command::Simulate { config, out, format } => {
            let cfg = load(&config)?;
            let result = scenario::run(&cfg)?;
            scenario::write_timeseries(&result.reports, &out, format.unwrap_or(cfg.output_format))?;
            if let Some(dev) = result.oracle_deviation {
                eprintln!("oracle deviation {dev:.3e}");
            }
            eprintln!("wrote {} rows to {}", result.reports.len(), out.display());
            Ok(0)
        }
        Command::Figures { config, outdir } => {
            let cfg = load(&config)?;
            let result = scenario::run(&cfg)?;
            for path in scenario::figure_datasets(&result.reports, &outdir)? {
                eprintln!("wrote {}", path.display());
            }
            Ok(0)
        }
        Command::Validate { quick, inject_sign_error } => {
            let results = validation::run(ValidationOptions {
                quick,
                inject_sign_error,
            })?;
            let mut out = std::io::stdout().lock();
            for r in &results {
                let _ = writeln!(out, "{r}");
            }
            Ok(if validation::all_passed(&results) { 0 } else { 3 })
        }
        Command::PrintParams { config } => {
            let cfg = load(&config)?;
            let text = serde_json::to_string_pretty(&scenario::describe(&cfg)?)?;
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
