use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ndnoma_cli::run::{install_thread_pool, load_config, run_reproduce, run_sweep_command, run_validate, Overrides};
use ndnoma_cli::CliError;
use ndnoma_core::DlModel;

/// Link-level BER sweeps and analytical error-probability curves for a
/// three-user noise-domain multiple-access system.
#[derive(Parser)]
#[command(name = "ndnoma", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone)]
struct CommonFlags {
    /// Master seed (falls back to NDNOMA_SEED, then 1)
    #[arg(long)]
    seed: Option<u64>,
    /// Output CSV path (overrides the config's [output] section)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (default: all cores); results are identical either way
    #[arg(long)]
    threads: Option<usize>,
    /// Downlink frame model: joint or superposed
    #[arg(long)]
    dl_model: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Monte Carlo BER sweep plus theory curves over the configured grid
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Theory curves only (no simulation)
    Theory {
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Parse and validate a config file
    Validate {
        #[arg(long)]
        config: PathBuf,
    },
    /// Run a canned figure sweep: fig3, fig4, fig5, or fig6
    Reproduce {
        name: String,
        #[command(flatten)]
        common: CommonFlags,
    },
}

fn overrides(common: &CommonFlags) -> Result<Overrides, CliError> {
    let dl_model = match &common.dl_model {
        Some(s) => Some(s.parse::<DlModel>().map_err(CliError::Core)?),
        None => None,
    };
    Ok(Overrides {
        seed: common.seed,
        out: common.out.clone(),
        threads: common.threads,
        dl_model,
    })
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Sweep { config, common } => {
            let ov = overrides(&common)?;
            install_thread_pool(ov.threads)?;
            run_sweep_command(load_config(&config)?, &ov, false)
        }
        Command::Theory { config, common } => {
            let ov = overrides(&common)?;
            install_thread_pool(ov.threads)?;
            run_sweep_command(load_config(&config)?, &ov, true)
        }
        Command::Validate { config } => run_validate(&config),
        Command::Reproduce { name, common } => {
            let ov = overrides(&common)?;
            install_thread_pool(ov.threads)?;
            run_reproduce(&name, &ov)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
