use std::fmt::Write as _;

use serde::Serialize;

use crate::algcore::{CheckReport, Status};
use crate::cyclichom::HomologyReport;
use crate::error::Error;
use crate::exactlin::{Matrix, Scalar};

use super::SCHEMA_VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TaskStatus {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrorRecord {
    pub kind: String,
    pub message: String,
}

impl From<&Error> for ErrorRecord {
    fn from(e: &Error) -> Self {
        ErrorRecord { kind: e.kind().to_string(), message: e.to_string() }
    }
}

/// Dimensions per degree, plus the truncation they were computed at.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyTable {
    pub theory: String,
    pub dims: Vec<usize>,
    pub truncation: usize,
}

impl From<&HomologyReport> for HomologyTable {
    fn from(h: &HomologyReport) -> Self {
        let theory = serde_json::to_value(h.theory).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
        HomologyTable { theory, dims: h.dims.clone(), truncation: h.top }
    }
}

/// Matrix entries as `"p/q"` strings, row-major.
pub fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows).map(|i| (0..m.cols).map(|j| scalar_string(&m.get(i, j))).collect()).collect()
}

pub fn scalar_string(c: &Scalar) -> String {
    match c {
        Scalar::Q(_) => match c.as_i64_frac() {
            Some((n, d)) => format!("{n}/{d}"),
            None => {
                let s = c.to_string();
                if s.contains('/') {
                    s
                } else {
                    format!("{s}/1")
                }
            }
        },
        Scalar::Fp { .. } => c.to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TaskReport {
    pub index: usize,
    pub kind: String,
    pub object: String,
    pub status: TaskStatus,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology: Option<HomologyTable>,
    /// Induced maps on homology bases, one matrix per degree.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maps: Option<Vec<Vec<Vec<String>>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorRecord>,
}

impl TaskReport {
    pub fn new(index: usize, kind: &str, object: &str) -> Self {
        TaskReport {
            index,
            kind: kind.into(),
            object: object.into(),
            status: TaskStatus::Pass,
            checks: Vec::new(),
            homology: None,
            maps: None,
            error: None,
        }
    }

    pub fn settle(mut self) -> Self {
        self.status = if self.error.is_some() {
            TaskStatus::Error
        } else if self.checks.iter().all(CheckReport::passed) {
            TaskStatus::Pass
        } else {
            TaskStatus::Fail
        };
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub version: u32,
    pub tasks: Vec<TaskReport>,
}

impl Default for ReportDocument {
    fn default() -> Self {
        ReportDocument { version: SCHEMA_VERSION, tasks: Vec::new() }
    }
}

impl ReportDocument {
    pub fn count(&self, s: TaskStatus) -> usize {
        self.tasks.iter().filter(|t| t.status == s).count()
    }

    /// 0 when everything passes, 1 on a failed axiom or certificate, 2 on an input error.
    pub fn exit_code(&self) -> i32 {
        let input_error = self
            .tasks
            .iter()
            .any(|t| t.error.as_ref().is_some_and(|e| e.kind != "CertificateFailure"));
        if input_error {
            2
        } else if self.tasks.iter().any(|t| t.status != TaskStatus::Pass) {
            1
        } else {
            0
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

pub fn emit(report: &ReportDocument, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s.into_bytes()
        }
        Format::Text => text(report).into_bytes(),
    }
}

fn text(report: &ReportDocument) -> String {
    let mut out = String::new();
    for t in &report.tasks {
        let st = match t.status {
            TaskStatus::Pass => "pass",
            TaskStatus::Fail => "FAIL",
            TaskStatus::Error => "ERROR",
        };
        let _ = writeln!(out, "[{st}] #{} {} {}", t.index, t.kind, t.object);
        for c in &t.checks {
            for r in c.results.iter().filter(|r| r.status != Status::Pass) {
                let _ = write!(out, "    {}: {} {:?}", c.subject, r.axiom, r.status);
                if let Some(w) = &r.witness {
                    let _ = write!(out, " at {w:?}");
                }
                out.push('\n');
            }
        }
        if let Some(h) = &t.homology {
            let dims: Vec<String> = h.dims.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "    {} dims ({})", h.theory, dims.join(", "));
        }
        if let Some(maps) = &t.maps {
            for (n, m) in maps.iter().enumerate() {
                let rows: Vec<String> = m.iter().map(|r| r.join(" ")).collect();
                let _ = writeln!(out, "    degree {n}: [{}]", rows.join("; "));
            }
        }
        if let Some(e) = &t.error {
            let _ = writeln!(out, "    {}: {}", e.kind, e.message);
        }
    }
    let _ = writeln!(
        out,
        "total: {} pass, {} fail, {} error",
        report.count(TaskStatus::Pass),
        report.count(TaskStatus::Fail),
        report.count(TaskStatus::Error)
    );
    out
}
