//! Canned sweep configurations for the four reference BER/BEP figures.
//! Effort knobs are sized so each preset finishes within tens of minutes on
//! a single core while keeping Monte Carlo noise well below the curve
//! separation of interest.

use crate::config::Config;
use crate::CliError;
use ndnoma_core::Link;

pub const PRESET_NAMES: [&str; 4] = ["fig3", "fig4", "fig5", "fig6"];

pub fn preset(name: &str) -> Result<Config, CliError> {
    let mut cfg = Config {
        min_bits: 10_000,
        max_bits: 100_000,
        target_errors: 100,
        j: 2_000,
        inner_draws: 1_000,
        ..Config::default()
    };
    match name {
        // uplink vs delta for two frame lengths
        "fig3" => {
            cfg.link = Link::Uplink;
            cfg.delta_db_start = -30.0;
            cfg.k_db = vec![10.0];
            cfg.n = vec![150, 200];
        }
        // uplink vs delta for two Rician factors
        "fig4" => {
            cfg.link = Link::Uplink;
            cfg.delta_db_start = -30.0;
            cfg.k_db = vec![5.0, 10.0];
            cfg.n = vec![200];
        }
        // downlink vs delta for two frame lengths
        "fig5" => {
            cfg.link = Link::Downlink;
            cfg.delta_db_start = -40.0;
            cfg.k_db = vec![10.0];
            cfg.n = vec![150, 200];
        }
        // downlink vs delta for two Rician factors
        "fig6" => {
            cfg.link = Link::Downlink;
            cfg.delta_db_start = -40.0;
            cfg.k_db = vec![5.0, 10.0];
            cfg.n = vec![200];
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown preset `{other}` (expected one of {})",
                PRESET_NAMES.join(", ")
            )))
        }
    }
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_presets_valid() {
        for name in PRESET_NAMES {
            let cfg = preset(name).unwrap();
            cfg.check().unwrap();
        }
        assert!(preset("fig7").is_err());
    }

    #[test]
    fn preset_shapes() {
        assert_eq!(preset("fig3").unwrap().grid().unwrap().cells().len(), 18);
        assert_eq!(preset("fig4").unwrap().grid().unwrap().cells().len(), 18);
        assert_eq!(preset("fig5").unwrap().grid().unwrap().cells().len(), 22);
        assert_eq!(preset("fig6").unwrap().grid().unwrap().cells().len(), 22);
        assert_eq!(preset("fig5").unwrap().link, Link::Downlink);
    }
}
