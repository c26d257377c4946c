//! CSV emission under the fixed result schema.

use std::io::Write;
use std::path::Path;

use ndnoma_core::BerPoint;

use crate::CliError;

pub const CSV_HEADER: &str =
    "link,user,delta_db,k_db,n,bits,errors,ber,ci95_low,ci95_high,bep_theory,bep_theory_stderr";

/// Writes the header plus one row per point. Callers pass rows already in
/// the canonical (link, user, delta, K, N) order produced by the sweep.
pub fn emit_csv<W: Write>(rows: &[BerPoint], mut w: W) -> Result<(), CliError> {
    writeln!(w, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(w, "{}", row.csv_row())?;
    }
    Ok(())
}

pub fn write_csv_file(rows: &[BerPoint], path: &Path) -> Result<(), CliError> {
    let mut buf = Vec::new();
    emit_csv(rows, &mut buf)?;
    std::fs::write(path, buf)?;
    Ok(())
}
