use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::entropy::{EntropyReport, COLUMNS};
use crate::error::{Error, Result};

use super::OutputFormat;

/// Twelve significant digits in scientific notation.
pub fn format_value(x: f64) -> String {
    format!("{x:.11e}")
}

fn csv(header: &[&str], rows: impl Iterator<Item = Vec<f64>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.into_iter().map(format_value).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn render_timeseries(reports: &[EntropyReport], format: OutputFormat) -> Result<String> {
    if reports.is_empty() {
        return Err(Error::Config("no reports to write".into()));
    }
    Ok(match format {
        OutputFormat::Csv => csv(&COLUMNS, reports.iter().map(EntropyReport::row)),
        OutputFormat::Json => {
            let mut s = String::from("{\n  \"columns\": [");
            let names: Vec<String> = COLUMNS.iter().map(|c| format!("\"{c}\"")).collect();
            s.push_str(&names.join(", "));
            s.push_str("],\n  \"rows\": [\n");
            for (i, r) in reports.iter().enumerate() {
                let cells: Vec<String> = r.row().into_iter().map(format_value).collect();
                let sep = if i + 1 == reports.len() { "" } else { "," };
                let _ = writeln!(s, "    [{}]{sep}", cells.join(", "));
            }
            s.push_str("  ]\n}\n");
            s
        }
    })
}

pub fn write_timeseries(reports: &[EntropyReport], path: impl AsRef<Path>, format: OutputFormat) -> Result<()> {
    let text = render_timeseries(reports, format)?;
    let path = path.as_ref();
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

type Extract = fn(&EntropyReport) -> Vec<f64>;

/// File stem, header and row extractor of each figure dataset.
pub const FIGURES: [(&str, &[&str], Extract); 7] = [
    ("fig1", &["tau", "lam1", "lam2", "lam3", "lam4"], |r| with_tau(r, &r.lam)),
    ("fig2", &["tau", "lamR1", "lamR2", "lamR3", "lamR4"], |r| with_tau(r, &r.lam_r)),
    ("fig3", &["tau", "lamQ1", "lamQ2", "lamQ3", "lamQ4"], |r| with_tau(r, &r.lam_q)),
    ("fig4", &["tau", "S_full", "S_nu", "S_sigma", "S_Rnu", "S_Qnu"], |r| {
        with_tau(r, &[r.S_full, r.S_nu, r.S_sigma, r.S_Rnu, r.S_Qnu])
    }),
    ("fig5", &["tau", "S_sigma_given_nu", "S_R_given_nu", "S_Q_given_nu"], |r| {
        with_tau(r, &[r.S_sigma_given_nu, r.S_R_given_nu, r.S_Q_given_nu])
    }),
    (
        "fig6",
        &["tau", "I_sigma_nu", "I_sigmaz_nu", "I_sigmax_nu", "J_classical", "D_discord"],
        |r| with_tau(r, &[r.I_sigma_nu, r.I_sigmaz_nu, r.I_sigmax_nu, r.J_classical, r.D_discord]),
    ),
    ("fig7", &["tau", "lhs", "rhs_part1", "rhs_part2", "d_eur"], |r| {
        let e = r.eur();
        with_tau(r, &[e.lhs, e.rhs_bound, e.rhs_correction, e.d_eur])
    }),
];

fn with_tau(r: &EntropyReport, values: &[f64]) -> Vec<f64> {
    let mut v = Vec::with_capacity(values.len() + 1);
    v.push(r.tau);
    v.extend_from_slice(values);
    v
}

/// Writes fig1.csv … fig7.csv into `outdir`, creating it if needed.
pub fn figure_datasets(reports: &[EntropyReport], outdir: impl AsRef<Path>) -> Result<Vec<PathBuf>> {
    if reports.is_empty() {
        return Err(Error::Config("no reports to write".into()));
    }
    let outdir = outdir.as_ref();
    fs::create_dir_all(outdir).map_err(|e| Error::io(outdir, e))?;
    let mut written = Vec::with_capacity(FIGURES.len());
    for (stem, header, extract) in FIGURES {
        let path = outdir.join(format!("{stem}.csv"));
        fs::write(&path, csv(header, reports.iter().map(extract))).map_err(|e| Error::io(&path, e))?;
        written.push(path);
    }
    Ok(written)
}
