//! CSV and JSON exports of theory tables and analysis reports.
//!
//! CSV files start with one `#` metadata line, then a column header.

use std::io::Write;

use serde::Serialize;

use super::format::fmt_sig12;
use crate::analysis::{ConcentrationReport, DegreeHistogram, DeviationReport, ExponentFit};
use crate::error::Result;
use crate::theory::{beta_closed_form, beta_table, expected_histogram_dp};
use crate::VERSION;

/// Provenance embedded in every output file.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunMetadata {
    pub tool: &'static str,
    pub version: &'static str,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub seeds: Vec<u64>,
    pub trials: usize,
}

impl RunMetadata {
    pub fn new(k: usize, n: Option<usize>, seeds: Vec<u64>) -> Self {
        Self {
            tool: "ktree-lab",
            version: VERSION,
            k,
            n,
            trials: seeds.len(),
            seeds,
        }
    }

    fn comment_line(&self) -> String {
        let mut s = format!("# {} {} k={}", self.tool, self.version, self.k);
        if let Some(n) = self.n {
            s.push_str(&format!(" n={n}"));
        }
        if !self.seeds.is_empty() {
            let seeds: Vec<String> = self.seeds.iter().map(u64::to_string).collect();
            s.push_str(&format!(" seeds={}", seeds.join(",")));
        }
        s.push_str(&format!(" trials={}", self.trials));
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoryRow {
    pub d: usize,
    pub beta: f64,
    pub closed_form: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_dp: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoryTable {
    #[serde(flatten)]
    pub metadata: RunMetadata,
    pub d_max: usize,
    pub gamma: f64,
    pub rows: Vec<TheoryRow>,
}

/// `beta_d`, its closed form and, when `n` is given, `E[X_d(n)]` for `d = k..=d_max`.
pub fn theory_table(k: usize, d_max: usize, n: Option<usize>) -> Result<TheoryTable> {
    let beta = beta_table::<f64>(k, d_max)?;
    let dp = n
        .map(|n| expected_histogram_dp::<f64>(k, n, d_max))
        .transpose()?;
    let rows = beta
        .iter()
        .map(|(d, &b)| {
            Ok(TheoryRow {
                d,
                beta: b,
                closed_form: beta_closed_form(k, d)?,
                expected_dp: dp.as_ref().map(|t| t.get(d)),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TheoryTable {
        metadata: RunMetadata::new(k, n, vec![]),
        d_max,
        gamma: beta.gamma,
        rows,
    })
}

pub fn write_theory_csv<W: Write>(mut w: W, table: &TheoryTable) -> Result<()> {
    writeln!(
        w,
        "{} d_max={} gamma={}",
        table.metadata.comment_line(),
        table.d_max,
        fmt_sig12(table.gamma)
    )?;
    let with_dp = table.rows.iter().any(|r| r.expected_dp.is_some());
    if with_dp {
        writeln!(w, "d,beta,closed_form,expected_dp")?;
    } else {
        writeln!(w, "d,beta,closed_form")?;
    }
    for row in &table.rows {
        write!(
            w,
            "{},{},{}",
            row.d,
            fmt_sig12(row.beta),
            fmt_sig12(row.closed_form)
        )?;
        if let Some(y) = row.expected_dp {
            write!(w, ",{}", fmt_sig12(y))?;
        }
        writeln!(w)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write, T: Serialize>(mut w: W, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

pub fn write_deviation_csv<W: Write>(
    mut w: W,
    meta: &RunMetadata,
    report: &DeviationReport,
) -> Result<()> {
    writeln!(
        w,
        "{} d_cut={} max_abs_error={} total_variation_distance={}",
        meta.comment_line(),
        report.d_cut,
        fmt_sig12(report.max_abs_error),
        fmt_sig12(report.total_variation_distance)
    )?;
    writeln!(w, "d,empirical_fraction,beta,abs_error,rel_error")?;
    for r in &report.rows {
        writeln!(
            w,
            "{},{},{},{},{}",
            r.d,
            fmt_sig12(r.empirical_fraction),
            fmt_sig12(r.beta),
            fmt_sig12(r.abs_error),
            fmt_sig12(r.rel_error)
        )?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_histogram_csv<W: Write>(
    mut w: W,
    meta: &RunMetadata,
    hist: &DegreeHistogram,
) -> Result<()> {
    writeln!(w, "{}", meta.comment_line())?;
    writeln!(w, "d,count,fraction")?;
    for (&d, &c) in &hist.counts {
        writeln!(w, "{d},{c},{}", fmt_sig12(hist.fraction(d)))?;
    }
    w.flush()?;
    Ok(())
}

/// JSON document for `concentration` runs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConcentrationOutput<'a> {
    #[serde(flatten)]
    pub metadata: RunMetadata,
    pub report: &'a ConcentrationReport,
}

/// JSON summary written next to the CSV files of an `analyze` run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisSummary<'a> {
    #[serde(flatten)]
    pub metadata: RunMetadata,
    pub histogram_invariants: std::result::Result<(), String>,
    pub max_abs_error: f64,
    pub total_variation_distance: f64,
    pub exponent_fit: std::result::Result<&'a ExponentFit, String>,
}
