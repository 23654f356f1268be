//! Reference zero tables, the computed-zero store, and comparison reports.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::config::PrecisionConfig;
use crate::dynamics::ZeroRecord;
use crate::error::{Error, Result};

/// An ordered list of reference zero ordinates with provenance.
#[derive(Debug, Clone)]
pub struct ReferenceTable {
    pub zeros: Vec<f64>,
    pub source: String,
    /// Decimal places carried by the source text (the minimum over lines).
    pub digits: u32,
}

/// Parse a plain-text table: one ascending ordinate per line, optional
/// leading index column, '#' comments and blank lines skipped.
pub fn parse_reference_table(text: &str) -> Result<ReferenceTable> {
    let mut zeros = Vec::new();
    let mut digits = u32::MAX;
    let mut prev = f64::NEG_INFINITY;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (first, second) = (tokens.next(), tokens.next());
        if tokens.next().is_some() {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected at most two columns, got '{line}'"),
            });
        }
        let token = match (first, second) {
            (Some(_), Some(v)) => v, // leading index column
            (Some(v), None) => v,
            _ => unreachable!("split_whitespace on a non-empty line"),
        };
        let value: f64 = token.parse().map_err(|e| Error::Parse {
            line: line_no,
            msg: format!("'{token}': {e}"),
        })?;
        if !value.is_finite() {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("non-finite value '{token}'"),
            });
        }
        if value <= prev {
            return Err(Error::Ordering {
                line: line_no,
                value,
                previous: prev,
            });
        }
        if let Some(dot) = token.find('.') {
            digits = digits.min((token.len() - dot - 1) as u32);
        } else {
            digits = 0;
        }
        zeros.push(value);
        prev = value;
    }
    if zeros.is_empty() {
        digits = 0;
    }
    Ok(ReferenceTable {
        zeros,
        source: String::new(),
        digits: digits.min(17),
    })
}

pub fn load_reference_table(path: &Path) -> Result<ReferenceTable> {
    let text = std::fs::read_to_string(path)?;
    let mut table = parse_reference_table(&text)?;
    table.source = path.display().to_string();
    Ok(table)
}

/// Serialize a reference table back to the plain-text format at its stated
/// precision.
pub fn serialize_reference_table(table: &ReferenceTable) -> String {
    let mut out = String::new();
    if !table.source.is_empty() {
        out.push_str(&format!("# source: {}\n", table.source));
    }
    for z in &table.zeros {
        out.push_str(&format!("{:.*}\n", table.digits as usize, z));
    }
    out
}

// ---------------------------------------------------------------------------
// Computed-zero store (JSON lines, resumable)
// ---------------------------------------------------------------------------

/// One line of the computed-zero store.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct StoreRecord {
    pub n: u32,
    pub y: f64,
    pub iterations: u32,
    pub final_h: f64,
    pub residual: f64,
}

impl From<&ZeroRecord> for StoreRecord {
    fn from(r: &ZeroRecord) -> Self {
        Self {
            n: r.n,
            y: r.y,
            iterations: r.iterations,
            final_h: r.final_h,
            residual: r.z_residual,
        }
    }
}

/// Load the store, checking that it is a contiguous ascending run from n = 1.
pub fn load_store(path: &Path) -> Result<Vec<StoreRecord>> {
    if !path.exists() {
        return Ok(Vec::new());
    }
    let reader = BufReader::new(File::open(path)?);
    let mut records: Vec<StoreRecord> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: StoreRecord = serde_json::from_str(&line).map_err(|e| Error::StoreParse {
            line: idx + 1,
            msg: e.to_string(),
        })?;
        let expect = records.len() as u32 + 1;
        if rec.n != expect {
            return Err(Error::InvalidStore {
                index: idx + 1,
                msg: format!("expected record n = {expect}, found n = {}", rec.n),
            });
        }
        if let Some(last) = records.last() {
            if rec.y <= last.y {
                return Err(Error::InvalidStore {
                    index: idx + 1,
                    msg: format!("ordinates must increase: {} after {}", rec.y, last.y),
                });
            }
        }
        records.push(rec);
    }
    Ok(records)
}

/// Append records to the store file.
pub fn append_store(path: &Path, records: &[StoreRecord]) -> Result<()> {
    let file = OpenOptions::new().create(true).append(true).open(path)?;
    let mut w = BufWriter::new(file);
    for rec in records {
        serde_json::to_writer(&mut w, rec).map_err(|e| Error::StoreParse {
            line: rec.n as usize,
            msg: e.to_string(),
        })?;
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}

// ---------------------------------------------------------------------------
// Comparison report
// ---------------------------------------------------------------------------

/// Per-zero comparison row.
#[derive(Debug, Clone, Serialize)]
pub struct ZeroDiagnostics {
    pub n: u32,
    pub y_computed: f64,
    pub y_reference: Option<f64>,
    pub abs_error: Option<f64>,
    pub iterations: u32,
    pub final_h: f64,
    pub multiplier: f64,
    pub bracket_ok: bool,
    pub failure: bool,
}

/// Comparison of computed zeros against a reference table.
#[derive(Debug, Clone, Serialize)]
pub struct DiagnosticsReport {
    pub per_zero: Vec<ZeroDiagnostics>,
    pub max_error: f64,
    pub mean_iterations: f64,
    pub failures: u32,
    /// Computed zeros without a reference entry, and vice versa.
    pub missing_reference: usize,
    pub missing_computed: usize,
}

/// Pair computed records with reference entries by index. The comparison
/// tolerance is the coarser of the reference precision and the configured
/// fixed-point tolerance; an absolute error above ten times it is a failure.
pub fn compare(
    computed: &[ZeroRecord],
    reference: &ReferenceTable,
    cfg: &PrecisionConfig,
) -> DiagnosticsReport {
    let tol = 10f64.powi(-(reference.digits as i32)).max(cfg.tol_fixed_point);
    let mut per_zero = Vec::with_capacity(computed.len());
    let mut max_error: f64 = 0.0;
    let mut iter_sum = 0u64;
    let mut failures = 0u32;
    for rec in computed {
        let y_ref = reference.zeros.get((rec.n - 1) as usize).copied();
        let abs_error = y_ref.map(|r| (rec.y - r).abs());
        let failure = abs_error.map(|e| e > 10.0 * tol).unwrap_or(false);
        if let Some(e) = abs_error {
            max_error = max_error.max(e);
        }
        if failure {
            failures += 1;
        }
        iter_sum += rec.iterations as u64;
        per_zero.push(ZeroDiagnostics {
            n: rec.n,
            y_computed: rec.y,
            y_reference: y_ref,
            abs_error,
            iterations: rec.iterations,
            final_h: rec.final_h,
            multiplier: rec.multiplier,
            bracket_ok: rec.bracket_ok(),
            failure,
        });
    }
    let mean_iterations = if computed.is_empty() {
        0.0
    } else {
        iter_sum as f64 / computed.len() as f64
    };
    DiagnosticsReport {
        per_zero,
        max_error,
        mean_iterations,
        failures,
        missing_reference: computed
            .iter()
            .filter(|r| reference.zeros.len() < r.n as usize)
            .count(),
        missing_computed: reference.zeros.len().saturating_sub(computed.len()),
    }
}

pub const REPORT_CSV_HEADER: &str =
    "n,y_computed,y_reference,abs_error,iterations,final_h,multiplier,bracket_ok";

/// Render the report as CSV with the fixed column set.
pub fn report_to_csv(report: &DiagnosticsReport) -> String {
    let mut out = String::from(REPORT_CSV_HEADER);
    out.push('\n');
    for row in &report.per_zero {
        let y_ref = row
            .y_reference
            .map(|v| v.to_string())
            .unwrap_or_default();
        let err = row.abs_error.map(|v| format!("{v:e}")).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            row.n, row.y_computed, y_ref, err, row.iterations, row.final_h, row.multiplier,
            row.bracket_ok
        ));
    }
    out
}
