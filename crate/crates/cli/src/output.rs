// SPDX-License-Identifier: Apache-2.0

//! CSV and JSON rendering of sweep rows.
//!
//! Numbers are written in Rust's shortest round-trip form, so parsing a
//! field gives back the exact `f64`. Points that were not computed leave
//! their numeric fields empty.

use std::io::{Read, Write};

use serde::Serialize;
use thiserror::Error;

use crate::sweep::{PointOutcome, SweepRow};

pub const COLUMNS: [&str; 8] = [
    "sweep_parameter",
    "value",
    "tight_bound",
    "resource_ergotropy",
    "locked_energy",
    "free_energy_bound",
    "thermo_limit_locked",
    "wall_time_ms",
];

/// Parameter name written for a single-point report.
pub const NO_PARAMETER: &str = "none";

#[derive(Debug, Error)]
pub enum OutputError {
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("bad header: expected {expected:?}, found {found:?}")]
    Header { expected: Vec<String>, found: Vec<String> },
    #[error("row {row}, column `{column}`: cannot parse {text:?} as a number")]
    Number { row: usize, column: &'static str, text: String },
}

/// One row as it appears on disk.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub sweep_parameter: String,
    pub value: Option<f64>,
    pub tight_bound: Option<f64>,
    pub resource_ergotropy: Option<f64>,
    pub locked_energy: Option<f64>,
    pub free_energy_bound: Option<f64>,
    pub thermo_limit_locked: Option<f64>,
    pub wall_time_ms: Option<f64>,
    /// Why the point has no numbers; JSON only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl From<&SweepRow> for Record {
    fn from(row: &SweepRow) -> Self {
        let r = row.report();
        let error = match &row.outcome {
            PointOutcome::Report(_) => None,
            PointOutcome::SizeCap { size, cap } => {
                Some(format!("joint spectrum of size {size} exceeds the cap {cap}"))
            }
            PointOutcome::Failed(msg) => Some(msg.clone()),
        };
        Record {
            sweep_parameter: row.parameter.map_or(NO_PARAMETER, |p| p.name()).to_string(),
            value: row.value,
            tight_bound: r.map(|r| r.tight_bound),
            resource_ergotropy: r.map(|r| r.resource_ergotropy),
            locked_energy: r.map(|r| r.locked_energy),
            free_energy_bound: r.map(|r| r.free_energy_bound),
            thermo_limit_locked: r.map(|r| r.thermo_limit_locked),
            wall_time_ms: row.wall_time_ms,
            error,
        }
    }
}

impl Record {
    fn numbers(&self) -> [Option<f64>; 7] {
        [
            self.value,
            self.tight_bound,
            self.resource_ergotropy,
            self.locked_energy,
            self.free_energy_bound,
            self.thermo_limit_locked,
            self.wall_time_ms,
        ]
    }
}

/// Shortest string that parses back to `x`.
pub fn format_number(x: f64) -> String {
    format!("{x:?}")
}

fn format_field(x: Option<f64>) -> String {
    x.map(format_number).unwrap_or_default()
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<(), OutputError> {
    let records: Vec<Record> = rows.iter().map(Record::from).collect();
    write_records_csv(&records, out)
}

pub fn write_records_csv<W: Write>(records: &[Record], out: W) -> Result<(), OutputError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(COLUMNS)?;
    for rec in records {
        let mut fields = vec![rec.sweep_parameter.clone()];
        fields.extend(rec.numbers().into_iter().map(format_field));
        w.write_record(&fields)?;
    }
    w.flush()?;
    Ok(())
}

/// Parses CSV written by [`write_csv`]. The `error` field is not stored in
/// CSV and comes back as `None`.
pub fn read_csv<R: Read>(input: R) -> Result<Vec<Record>, OutputError> {
    let mut r = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let header: Vec<String> = r.headers()?.iter().map(str::to_string).collect();
    if header != COLUMNS {
        return Err(OutputError::Header {
            expected: COLUMNS.iter().map(|s| s.to_string()).collect(),
            found: header,
        });
    }
    let mut out = Vec::new();
    for (i, rec) in r.records().enumerate() {
        let rec = rec?;
        let num = |col: usize| -> Result<Option<f64>, OutputError> {
            let text = rec.get(col).unwrap_or("");
            if text.is_empty() {
                return Ok(None);
            }
            text.parse().map(Some).map_err(|_| OutputError::Number {
                row: i + 1,
                column: COLUMNS[col],
                text: text.to_string(),
            })
        };
        out.push(Record {
            sweep_parameter: rec.get(0).unwrap_or("").to_string(),
            value: num(1)?,
            tight_bound: num(2)?,
            resource_ergotropy: num(3)?,
            locked_energy: num(4)?,
            free_energy_bound: num(5)?,
            thermo_limit_locked: num(6)?,
            wall_time_ms: num(7)?,
            error: None,
        });
    }
    Ok(out)
}

#[derive(Serialize)]
struct JsonDocument<'a> {
    rows: &'a [Record],
}

/// `{"rows": [...]}` with one object per row; `null` marks missing numbers.
pub fn write_json<W: Write>(rows: &[SweepRow], mut out: W) -> Result<(), OutputError> {
    let records: Vec<Record> = rows.iter().map(Record::from).collect();
    serde_json::to_writer_pretty(&mut out, &JsonDocument { rows: &records })?;
    out.write_all(b"\n")?;
    Ok(())
}
