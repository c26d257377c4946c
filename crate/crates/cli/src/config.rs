//! INI-style configuration: `[system]`, `[sweep]`, and `[output]` sections
//! with defaults matching the reference operating point (P = 40 dBm,
//! alpha = 10, psi = 1/2, rho = -1/+1, beta = 1/100 uplink or 1/1024
//! downlink).

use std::fmt::Write as _;
use std::path::PathBuf;

use ndnoma_core::sweep::{db_range, BaseConfig};
use ndnoma_core::{DlModel, Link, SweepGrid};

use crate::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    // [system]
    pub link: Link,
    pub p_dbm: f64,
    pub alpha: f64,
    pub beta: Option<f64>,
    pub psi: f64,
    pub rho_l: f64,
    pub rho_h: f64,
    pub m3: Option<f64>,
    pub dl_model: DlModel,
    // [sweep]
    pub delta_db_start: f64,
    pub delta_db_stop: f64,
    pub delta_db_step: f64,
    pub k_db: Vec<f64>,
    pub n: Vec<usize>,
    pub min_bits: u64,
    pub max_bits: u64,
    pub target_errors: u64,
    pub j: usize,
    pub inner_draws: usize,
    // [output]
    pub out: Option<PathBuf>,
    pub journal: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            link: Link::Uplink,
            p_dbm: 40.0,
            alpha: 10.0,
            beta: None,
            psi: 0.5,
            rho_l: -1.0,
            rho_h: 1.0,
            m3: None,
            dl_model: DlModel::Superposed,
            delta_db_start: -30.0,
            delta_db_stop: 10.0,
            delta_db_step: 5.0,
            k_db: vec![10.0],
            n: vec![200],
            min_bits: 10_000,
            max_bits: 10_000_000,
            target_errors: 200,
            j: 200_000,
            inner_draws: 1_000,
            out: None,
            journal: None,
        }
    }
}

impl Config {
    /// The power-allocation coefficient, defaulted per link direction when
    /// not set explicitly.
    pub fn beta(&self) -> f64 {
        self.beta.unwrap_or(match self.link {
            Link::Uplink => 1.0 / 100.0,
            Link::Downlink => 1.0 / 1024.0,
        })
    }

    pub fn parse(text: &str) -> Result<Config, CliError> {
        let mut cfg = Config::default();
        let mut section = String::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = match raw.find(['#', ';']) {
                Some(i) => &raw[..i],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
                section = name.trim().to_ascii_lowercase();
                if !matches!(section.as_str(), "system" | "sweep" | "output") {
                    return Err(CliError::config(lineno, format!("unknown section `[{section}]`")));
                }
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::config(lineno, format!("expected `key = value`, got `{line}`")));
            };
            let key = key.trim().to_ascii_lowercase();
            let value = value.trim();
            cfg.apply(&section, &key, value, lineno)?;
        }
        cfg.check()?;
        Ok(cfg)
    }

    fn apply(&mut self, section: &str, key: &str, value: &str, lineno: usize) -> Result<(), CliError> {
        let bad = |what: &str| CliError::config(lineno, format!("key `{key}`: {what} (got `{value}`)"));
        let f = || value.parse::<f64>().map_err(|_| bad("expected a number"));
        let u = || value.parse::<u64>().map_err(|_| bad("expected a non-negative integer"));
        let f_list = || -> Result<Vec<f64>, CliError> {
            value
                .split(',')
                .map(|s| s.trim().parse::<f64>().map_err(|_| bad("expected a comma-separated number list")))
                .collect()
        };
        match (section, key) {
            ("system", "link") => self.link = value.parse().map_err(|_| bad("expected `uplink` or `downlink`"))?,
            ("system", "p_dbm") => self.p_dbm = f()?,
            ("system", "alpha") => self.alpha = f()?,
            ("system", "beta") => self.beta = Some(f()?),
            ("system", "psi") => self.psi = f()?,
            ("system", "rho_l") => self.rho_l = f()?,
            ("system", "rho_h") => self.rho_h = f()?,
            ("system", "m3") => self.m3 = Some(f()?),
            ("system", "dl_model") => {
                self.dl_model = value.parse().map_err(|_| bad("expected `joint` or `superposed`"))?
            }
            ("sweep", "delta_db_start") => self.delta_db_start = f()?,
            ("sweep", "delta_db_stop") => self.delta_db_stop = f()?,
            ("sweep", "delta_db_step") => {
                self.delta_db_step = f()?;
                if self.delta_db_step <= 0.0 {
                    return Err(bad("step must be positive"));
                }
            }
            ("sweep", "k_db") => self.k_db = f_list()?,
            ("sweep", "n") => {
                self.n = value
                    .split(',')
                    .map(|s| s.trim().parse::<usize>().map_err(|_| bad("expected a comma-separated integer list")))
                    .collect::<Result<_, _>>()?
            }
            ("sweep", "min_bits") => self.min_bits = u()?,
            ("sweep", "max_bits") => self.max_bits = u()?,
            ("sweep", "target_errors") => self.target_errors = u()?,
            ("sweep", "j") => self.j = u()? as usize,
            ("sweep", "inner_draws") => self.inner_draws = u()? as usize,
            ("output", "out") => self.out = Some(PathBuf::from(value)),
            ("output", "journal") => self.journal = Some(PathBuf::from(value)),
            _ => {
                return Err(CliError::config(
                    lineno,
                    format!("unknown key `{key}` in section `[{section}]`"),
                ))
            }
        }
        Ok(())
    }

    /// Cross-field validation, independent of where the values came from.
    pub fn check(&self) -> Result<(), CliError> {
        self.grid().map(|_| ())
    }

    pub fn grid(&self) -> Result<SweepGrid, CliError> {
        let grid = SweepGrid {
            link: self.link,
            delta_db: db_range(self.delta_db_start, self.delta_db_stop, self.delta_db_step)?,
            k_db: self.k_db.clone(),
            n: self.n.clone(),
            min_bits: self.min_bits,
            max_bits: self.max_bits,
            target_errors: self.target_errors,
            j: self.j,
            inner_draws: self.inner_draws,
            dl_model: self.dl_model,
            base: BaseConfig {
                p_dbm: self.p_dbm,
                alpha: self.alpha,
                beta: self.beta(),
                psi: self.psi,
                rho_l: self.rho_l,
                rho_h: self.rho_h,
                m3: self.m3,
            },
        };
        grid.validate()?;
        // every cell must describe a valid operating point
        for cell in grid.cells() {
            grid.params_for(&cell)?.validate()?;
        }
        Ok(grid)
    }

    /// Serializes to the same INI dialect `parse` reads.
    pub fn to_ini(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "[system]");
        let _ = writeln!(s, "link = {}", self.link.as_str());
        let _ = writeln!(s, "p_dbm = {}", self.p_dbm);
        let _ = writeln!(s, "alpha = {}", self.alpha);
        if let Some(beta) = self.beta {
            let _ = writeln!(s, "beta = {beta}");
        }
        let _ = writeln!(s, "psi = {}", self.psi);
        let _ = writeln!(s, "rho_l = {}", self.rho_l);
        let _ = writeln!(s, "rho_h = {}", self.rho_h);
        if let Some(m3) = self.m3 {
            let _ = writeln!(s, "m3 = {m3}");
        }
        let _ = writeln!(s, "dl_model = {}", self.dl_model.as_str());
        let _ = writeln!(s, "\n[sweep]");
        let _ = writeln!(s, "delta_db_start = {}", self.delta_db_start);
        let _ = writeln!(s, "delta_db_stop = {}", self.delta_db_stop);
        let _ = writeln!(s, "delta_db_step = {}", self.delta_db_step);
        let list = |v: &[f64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        let _ = writeln!(s, "k_db = {}", list(&self.k_db));
        let _ = writeln!(
            s,
            "n = {}",
            self.n.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
        );
        let _ = writeln!(s, "min_bits = {}", self.min_bits);
        let _ = writeln!(s, "max_bits = {}", self.max_bits);
        let _ = writeln!(s, "target_errors = {}", self.target_errors);
        let _ = writeln!(s, "j = {}", self.j);
        let _ = writeln!(s, "inner_draws = {}", self.inner_draws);
        let _ = writeln!(s, "\n[output]");
        if let Some(out) = &self.out {
            let _ = writeln!(s, "out = {}", out.display());
        }
        if let Some(journal) = &self.journal {
            let _ = writeln!(s, "journal = {}", journal.display());
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        let cfg = Config::default();
        cfg.check().unwrap();
        assert_eq!(cfg.beta(), 0.01);
        let grid = cfg.grid().unwrap();
        assert_eq!(grid.delta_db.len(), 9);
    }

    #[test]
    fn downlink_beta_default() {
        let cfg = Config::parse("[system]\nlink = downlink\n").unwrap();
        assert_eq!(cfg.beta(), 1.0 / 1024.0);
    }

    #[test]
    fn parse_full_file() {
        let text = "\
# comment
[system]
link = downlink
p_dbm = 30 ; trailing comment
alpha = 8
psi = 0.6
dl_model = joint

[sweep]
delta_db_start = -40
delta_db_stop = 0
delta_db_step = 10
k_db = 5, 10
n = 150, 200
target_errors = 50

[output]
out = results.csv
";
        let cfg = Config::parse(text).unwrap();
        assert_eq!(cfg.link, Link::Downlink);
        assert_eq!(cfg.p_dbm, 30.0);
        assert_eq!(cfg.alpha, 8.0);
        assert_eq!(cfg.psi, 0.6);
        assert_eq!(cfg.dl_model, DlModel::Joint);
        assert_eq!(cfg.k_db, vec![5.0, 10.0]);
        assert_eq!(cfg.n, vec![150, 200]);
        assert_eq!(cfg.target_errors, 50);
        assert_eq!(cfg.out, Some(PathBuf::from("results.csv")));
        assert_eq!(cfg.grid().unwrap().cells().len(), 5 * 2 * 2);
    }

    #[test]
    fn unknown_key_reports_line() {
        let err = Config::parse("[system]\nlink = uplink\nbogus = 1\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 3"), "{msg}");
        assert!(msg.contains("bogus"), "{msg}");
    }

    #[test]
    fn unknown_section_rejected() {
        let err = Config::parse("[misc]\nx = 1\n").unwrap_err();
        assert!(err.to_string().contains("unknown section"), "{err}");
    }

    #[test]
    fn bad_value_reports_key_and_line() {
        let err = Config::parse("[system]\npsi = lots\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 2") && msg.contains("psi"), "{msg}");
    }

    #[test]
    fn out_of_range_rejected() {
        // psi = 1 leaves no variance-user power on the downlink
        let err = Config::parse("[system]\nlink = downlink\npsi = 1.0\n").unwrap_err();
        assert!(err.to_string().contains("psi"), "{err}");
        let err = Config::parse("[system]\nalpha = 1.0\n").unwrap_err();
        assert!(err.to_string().contains("alpha"), "{err}");
    }

    #[test]
    fn serialize_parse_round_trip() {
        let mut cfg = Config::default();
        cfg.link = Link::Downlink;
        cfg.beta = Some(0.002);
        cfg.m3 = Some(0.5);
        cfg.k_db = vec![5.0, 10.0];
        cfg.n = vec![150, 200];
        cfg.out = Some(PathBuf::from("x.csv"));
        cfg.journal = Some(PathBuf::from("x.journal"));
        let round = Config::parse(&cfg.to_ini()).unwrap();
        assert_eq!(cfg, round);
    }
}
