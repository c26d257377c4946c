//! Subcommand drivers shared by `main` and the integration tests.

use std::io::Write;
use std::path::{Path, PathBuf};

use ndnoma_core::sweep::run_sweep;
use ndnoma_core::DlModel;

use crate::config::Config;
use crate::output::{emit_csv, write_csv_file};
use crate::presets::preset;
use crate::CliError;

/// Environment variable consulted when `--seed` is absent.
pub const SEED_ENV: &str = "NDNOMA_SEED";
pub const DEFAULT_SEED: u64 = 1;

/// Flag/env overrides applied on top of a parsed config.
#[derive(Debug, Default, Clone)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub threads: Option<usize>,
    pub dl_model: Option<DlModel>,
}

pub fn resolve_seed(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .parse::<u64>()
            .map_err(|_| CliError::Usage(format!("{SEED_ENV} must be an unsigned integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

pub fn install_thread_pool(threads: Option<usize>) -> Result<(), CliError> {
    if let Some(t) = threads {
        if t == 0 {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    }
    Ok(())
}

pub fn load_config(path: &Path) -> Result<Config, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    Config::parse(&text)
}

fn apply_overrides(cfg: &mut Config, ov: &Overrides) {
    if let Some(m) = ov.dl_model {
        cfg.dl_model = m;
    }
    if let Some(out) = &ov.out {
        cfg.out = Some(out.clone());
    }
}

/// Runs a sweep (simulation + theory, or theory alone) and writes the CSV to
/// the configured destination, or stdout when none is set.
pub fn run_sweep_command(mut cfg: Config, ov: &Overrides, theory_only: bool) -> Result<(), CliError> {
    apply_overrides(&mut cfg, ov);
    let seed = resolve_seed(ov.seed)?;
    let grid = cfg.grid()?;
    let rows = run_sweep(&grid, seed, cfg.journal.as_deref(), theory_only)?;
    match &cfg.out {
        Some(path) => {
            write_csv_file(&rows, path)?;
            eprintln!("wrote {} rows to {}", rows.len(), path.display());
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            emit_csv(&rows, &mut lock)?;
            lock.flush()?;
        }
    }
    Ok(())
}

/// Parses and validates a config, reporting the derived grid size.
pub fn run_validate(path: &Path) -> Result<(), CliError> {
    let cfg = load_config(path)?;
    let grid = cfg.grid()?;
    println!(
        "ok: {} link, {} cells ({} delta x {} K x {} N)",
        grid.link.as_str(),
        grid.cells().len(),
        grid.delta_db.len(),
        grid.k_db.len(),
        grid.n.len()
    );
    Ok(())
}

/// Runs one of the canned figure sweeps.
pub fn run_reproduce(name: &str, ov: &Overrides) -> Result<(), CliError> {
    let mut cfg = preset(name)?;
    if cfg.out.is_none() {
        cfg.out = Some(PathBuf::from(format!("{name}.csv")));
    }
    run_sweep_command(cfg, ov, false)
}
