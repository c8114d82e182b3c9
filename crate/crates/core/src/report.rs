//! Serialization of check reports and computed values: JSON lines, CSV and
//! an aligned text table. Exact values are always written as `"p/q"` strings.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{CyclotomicField, CyclotomicNumber, Rational};
use crate::error::{Error, Result};
use crate::identities::{CheckReport, IdentityId, Param, Params, Status};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Table,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "table" => Ok(Format::Table),
            other => Err(Error::Parse(format!("unknown format `{other}` (json, csv, table)"))),
        }
    }
}

/// An exact value: rational when possible, else the full coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExactValue {
    Rational(Rational),
    Field(CyclotomicNumber),
}

impl ExactValue {
    pub fn from_number(a: &CyclotomicNumber) -> Self {
        match a.as_rational() {
            Ok(q) => ExactValue::Rational(q),
            Err(_) => ExactValue::Field(a.clone()),
        }
    }

    /// Lift into Q(zeta_n).
    pub fn into_number(self, n: u32) -> Result<CyclotomicNumber> {
        match self {
            ExactValue::Rational(q) => Ok(CyclotomicField::new(n)?.from_rational(&q)),
            ExactValue::Field(a) if a.order() == n => Ok(a),
            ExactValue::Field(a) => Err(Error::OrderMismatch { left: a.order(), right: n }),
        }
    }
}

/// `p/q`, or the bracketed coefficient list.
impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Rational(q) => write!(f, "{q}"),
            ExactValue::Field(a) => write!(f, "{a}"),
        }
    }
}

/// Wire form of a [`CheckReport`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub id: IdentityId,
    pub params: Params,
    pub lhs: ExactValue,
    pub rhs: Rational,
    pub status: Status,
    pub ms: Option<f64>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub extrapolated: bool,
}

impl From<&CheckReport> for ReportRow {
    fn from(r: &CheckReport) -> Self {
        ReportRow {
            id: r.id,
            params: r.params.clone(),
            lhs: ExactValue::from_number(&r.lhs),
            rhs: r.rhs.clone(),
            status: r.status,
            ms: r.ms(),
            extrapolated: r.extrapolated,
        }
    }
}

impl ReportRow {
    pub fn into_report(self) -> Result<CheckReport> {
        let n = self.params.get(Param::N)? as u32;
        Ok(CheckReport {
            id: self.id,
            params: self.params,
            lhs: self.lhs.into_number(n)?,
            rhs: self.rhs,
            status: self.status,
            wall_time: self.ms.map(|ms| std::time::Duration::from_secs_f64(ms / 1e3)),
            extrapolated: self.extrapolated,
        })
    }
}

/// Counts by status over a report list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub counts: BTreeMap<Status, usize>,
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Self {
        let mut counts: BTreeMap<Status, usize> = Status::ALL.iter().map(|&s| (s, 0)).collect();
        for r in reports {
            *counts.entry(r.status).or_default() += 1;
        }
        Summary { total: reports.len(), counts }
    }

    pub fn count(&self, s: Status) -> usize {
        self.counts.get(&s).copied().unwrap_or(0)
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "total={}", self.total)?;
        for (s, c) in &self.counts {
            write!(f, " {s}={c}")?;
        }
        Ok(())
    }
}

/// One line of JSON output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "lowercase")]
pub enum Record {
    Value(ValueRecord),
    Report(ReportRow),
    Summary(Summary),
}

/// A computed sum.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValueRecord {
    /// `"z"` or `"y"`.
    pub sum: String,
    pub n: u32,
    /// Composition `(1,2)` or multiset `{2:1,1:1}`.
    pub index: String,
    pub value: ExactValue,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub float: Option<FloatValue>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub check: Option<bool>,
}

/// Decimal strings of a complex embedding.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FloatValue {
    pub digits: usize,
    pub re: String,
    pub im: String,
}

/// Write reports followed by a summary in the chosen format.
pub fn write_reports<W: Write + ?Sized>(w: &mut W, reports: &[CheckReport], format: Format) -> Result<()> {
    let summary = Summary::of(reports);
    match format {
        Format::Json => {
            for r in reports {
                write_json_line(w, &Record::Report(r.into()))?;
            }
            write_json_line(w, &Record::Summary(summary))?;
        }
        Format::Csv => {
            let mut cw = csv::Writer::from_writer(&mut *w);
            cw.write_record(["id", "params", "lhs", "rhs", "status", "ms", "extrapolated"])
                .map_err(csv_err)?;
            for r in reports {
                let row = ReportRow::from(r);
                cw.write_record([
                    row.id.tag().to_string(),
                    row.params.to_string(),
                    row.lhs.to_string(),
                    row.rhs.to_string(),
                    row.status.to_string(),
                    row.ms.map(|m| m.to_string()).unwrap_or_default(),
                    row.extrapolated.to_string(),
                ])
                .map_err(csv_err)?;
            }
            cw.flush()?;
            drop(cw);
            writeln!(w, "# {summary}")?;
        }
        Format::Table => {
            let rows: Vec<[String; 6]> = reports
                .iter()
                .map(|r| {
                    let row = ReportRow::from(r);
                    let mut status = row.status.to_string();
                    if row.extrapolated {
                        status.push_str(" (extrapolated)");
                    }
                    [
                        row.id.tag().to_string(),
                        row.params.to_string(),
                        row.lhs.to_string(),
                        row.rhs.to_string(),
                        status,
                        row.ms.map(|m| format!("{m:.3}")).unwrap_or_else(|| "-".into()),
                    ]
                })
                .collect();
            let header = ["ID", "PARAMS", "LHS", "RHS", "STATUS", "MS"].map(String::from);
            let mut width = [0usize; 6];
            for row in std::iter::once(&header).chain(&rows) {
                for (k, cell) in row.iter().enumerate() {
                    width[k] = width[k].max(cell.chars().count());
                }
            }
            for row in std::iter::once(&header).chain(&rows) {
                let cells: Vec<String> =
                    row.iter().enumerate().map(|(k, c)| format!("{c:<w$}", w = width[k])).collect();
                writeln!(w, "{}", cells.join("  ").trim_end())?;
            }
            writeln!(w, "{summary}")?;
        }
    }
    Ok(())
}

pub fn write_json_line<W: Write + ?Sized>(w: &mut W, rec: &Record) -> Result<()> {
    let line = serde_json::to_string(rec).map_err(|e| Error::Parse(e.to_string()))?;
    writeln!(w, "{line}")?;
    Ok(())
}

/// Parse JSON-lines output back into reports and the trailing summary.
pub fn parse_json_reports(text: &str) -> Result<(Vec<CheckReport>, Option<Summary>)> {
    let mut reports = Vec::new();
    let mut summary = None;
    for (k, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let rec: Record =
            serde_json::from_str(line).map_err(|e| Error::Parse(format!("line {}: {e}", k + 1)))?;
        match rec {
            Record::Report(row) => reports.push(row.into_report()?),
            Record::Summary(s) => summary = Some(s),
            Record::Value(_) => {}
        }
    }
    Ok((reports, summary))
}

fn csv_err(e: csv::Error) -> Error {
    Error::Parse(format!("csv: {e}"))
}
