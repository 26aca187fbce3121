//! Flat machine-readable records and their CSV/JSON renderings.
//!
//! CSV is UTF-8, comma-separated with `\n` line endings and always carries a
//! header row. Integers are written as exact decimal strings; reals use the
//! shortest decimal that round-trips to the same double. JSON output is a
//! top-level array of flat objects with the same field names, so the two
//! renderings of one run contain identical values.

use serde::Serialize;

use crate::asymptotics::ResidualRow;
use crate::constants::ConstantEstimate;
use crate::summation::SummationResult;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// A flat row that can be rendered in either format.
pub trait Record: Serialize {
    fn csv_header() -> &'static str;
    fn csv_row(&self) -> String;
}

#[derive(Debug, Clone, Serialize)]
pub struct SumRecord {
    pub x: u64,
    pub quantity: String,
    pub method: String,
    pub value: u128,
    pub elapsed_ms: f64,
}

impl From<&SummationResult> for SumRecord {
    fn from(r: &SummationResult) -> Self {
        Self {
            x: r.x,
            quantity: r.quantity.as_str().to_owned(),
            method: r.method.as_str().to_owned(),
            value: r.value,
            elapsed_ms: r.elapsed_ms,
        }
    }
}

impl Record for SumRecord {
    fn csv_header() -> &'static str {
        "x,quantity,method,value,elapsed_ms"
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.x, self.quantity, self.method, self.value, self.elapsed_ms
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstantRecord {
    pub name: String,
    pub value: f64,
    pub tail_bound: f64,
    pub truncation: u64,
}

impl From<&ConstantEstimate> for ConstantRecord {
    fn from(e: &ConstantEstimate) -> Self {
        Self {
            name: e.name.label(),
            value: e.value,
            tail_bound: e.tail_bound,
            truncation: e.truncation,
        }
    }
}

impl Record for ConstantRecord {
    fn csv_header() -> &'static str {
        "name,value,tail_bound,truncation"
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{}",
            self.name, self.value, self.tail_bound, self.truncation
        )
    }
}

impl Record for ResidualRow {
    fn csv_header() -> &'static str {
        "x,exact,main_term,residual,normalized"
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.x, self.exact, self.main_term, self.residual, self.normalized
        )
    }
}

pub fn render_csv<R: Record>(rows: &[R]) -> String {
    let mut out = String::from(R::csv_header());
    out.push('\n');
    for row in rows {
        out.push_str(&row.csv_row());
        out.push('\n');
    }
    out
}

pub fn render_json<R: Record>(rows: &[R]) -> String {
    let mut out = serde_json::to_string_pretty(rows).expect("records serialize infallibly");
    out.push('\n');
    out
}

pub fn render<R: Record>(rows: &[R], format: Format) -> String {
    match format {
        Format::Csv => render_csv(rows),
        Format::Json => render_json(rows),
    }
}

/// Parses a threshold given either as a plain integer or in exact
/// mantissa-exponent form ("1e8" = 100000000). Fractional mantissas are
/// rejected; floating-point parsing would silently corrupt large inputs.
pub fn parse_exact_integer(s: &str) -> Result<u64> {
    let bad = || Error::Domain {
        what: "integer parse",
        x: 0,
    };
    let s = s.trim();
    if let Some((mantissa, exponent)) = s.split_once(['e', 'E']) {
        if mantissa.contains('.') || mantissa.contains('-') || exponent.contains('-') {
            return Err(bad());
        }
        let m: u64 = mantissa.parse().map_err(|_| bad())?;
        let e: u32 = exponent.parse().map_err(|_| bad())?;
        let scale = 10u64.checked_pow(e).ok_or_else(bad)?;
        m.checked_mul(scale).ok_or_else(bad)
    } else {
        s.parse().map_err(|_| bad())
    }
}
