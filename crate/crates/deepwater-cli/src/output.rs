//! CSV and JSON-lines writers for states, error tables, sweeps, and
//! per-step diagnostics. Floats in CSV are written with 17 significant
//! digits so a read-back reproduces the exact IEEE doubles; all files use
//! LF line endings.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use deepwater::experiments::{ErrorTable, QuotientTable};
use deepwater::model::WaveState;
use deepwater::stepping::Diagnostics;

use crate::CliError;

/// `{:.16e}` carries 1 + 16 = 17 significant digits: lossless for f64.
fn fmt(x: f64) -> String {
    format!("{x:.16e}")
}

/// Writes one state as `x,zeta,v` rows.
pub fn write_snapshot_csv(state: &WaveState, path: &Path) -> Result<(), CliError> {
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(b"x,zeta,v\n")?;
    for ((x, z), v) in state
        .grid()
        .nodes()
        .iter()
        .zip(state.zeta().values())
        .zip(state.v().values())
    {
        writeln!(w, "{},{},{}", fmt(*x), fmt(*z), fmt(*v))?;
    }
    w.flush()?;
    Ok(())
}

/// Writes `dt,error` rows followed by a `# slope=<value>` comment line.
pub fn write_error_table_csv(table: &ErrorTable, path: &Path) -> Result<(), CliError> {
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(b"dt,error\n")?;
    for row in table.rows() {
        writeln!(w, "{},{}", fmt(row.dt), fmt(row.error))?;
    }
    writeln!(w, "# slope={}", fmt(table.slope()))?;
    w.flush()?;
    Ok(())
}

/// Writes `(parameter, quotient)` rows under the given parameter header.
pub fn write_quotient_table_csv(
    table: &QuotientTable,
    parameter_name: &str,
    path: &Path,
) -> Result<(), CliError> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "{parameter_name},quotient")?;
    for row in table.rows() {
        writeln!(w, "{},{}", fmt(row.parameter), fmt(row.quotient))?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct DiagnosticsLine {
    t: f64,
    dt: f64,
    energy0: f64,
    max_zeta: f64,
    max_v: f64,
    mass: f64,
    momentum: f64,
}

/// Writes one JSON object per completed step.
pub fn write_diagnostics_jsonl(diag: &Diagnostics, path: &Path) -> Result<(), CliError> {
    let mut w = BufWriter::new(File::create(path)?);
    for r in &diag.records {
        let line = DiagnosticsLine {
            t: r.time,
            dt: r.dt,
            energy0: r.energy0,
            max_zeta: r.max_zeta,
            max_v: r.max_v,
            mass: r.mass,
            momentum: r.momentum,
        };
        serde_json::to_writer(&mut w, &line)?;
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}
