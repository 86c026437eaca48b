//! Run reports: one JSON object per line (header, rows, summary) plus an
//! optional CSV digest. Output is a pure function of the inputs apart from
//! the header timestamp.

use std::collections::BTreeMap;
use std::io;
use std::path::{Path, PathBuf};
use std::time::SystemTime;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::derivcheck::DerivativeCheckReport;
use crate::error::{Error, Result};
use crate::model::Point;
use crate::registry::ProblemRecord;
use crate::solver::SolveResult;
use crate::validation::{ValidationVerdict, Verdict};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RunKind {
    Derivcheck,
    Validate,
    Solve,
    Eval,
}

impl RunKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RunKind::Derivcheck => "derivcheck",
            RunKind::Validate => "validate",
            RunKind::Solve => "solve",
            RunKind::Eval => "eval",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum Line {
    Header {
        schema_version: u32,
        kind: RunKind,
        config: Value,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        timestamp: Option<String>,
    },
    Row {
        data: Value,
    },
    Summary {
        data: Value,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub kind: RunKind,
    /// Full effective configuration, defaults included.
    pub config: Value,
    pub timestamp: Option<String>,
    pub rows: Vec<Value>,
    pub summary: Value,
}

fn to_value(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("report data serialises")
}

impl RunReport {
    pub fn new(kind: RunKind, config: &impl Serialize) -> Self {
        Self {
            kind,
            config: to_value(config),
            timestamp: Some(humantime::format_rfc3339_seconds(SystemTime::now()).to_string()),
            rows: Vec::new(),
            summary: Value::Object(Default::default()),
        }
    }

    pub fn push(&mut self, row: &impl Serialize) {
        self.rows.push(to_value(row));
    }

    pub fn set_summary(&mut self, summary: &impl Serialize) {
        self.summary = to_value(summary);
    }

    pub fn without_timestamp(&self) -> Self {
        Self {
            timestamp: None,
            ..self.clone()
        }
    }

    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        let mut put = |l: Line| {
            out.push_str(&serde_json::to_string(&l).expect("report line serialises"));
            out.push('\n');
        };
        put(Line::Header {
            schema_version: REPORT_SCHEMA_VERSION,
            kind: self.kind,
            config: self.config.clone(),
            timestamp: self.timestamp.clone(),
        });
        for r in &self.rows {
            put(Line::Row { data: r.clone() });
        }
        put(Line::Summary {
            data: self.summary.clone(),
        });
        out
    }

    pub fn from_jsonl(text: &str) -> Result<Self> {
        let bad = |detail: String| Error::Invalid { what: "report", detail };
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let first = lines.next().ok_or_else(|| bad("empty report".into()))?;
        let Line::Header {
            schema_version,
            kind,
            config,
            timestamp,
        } = serde_json::from_str(first).map_err(|e| bad(e.to_string()))?
        else {
            return Err(bad("first line is not a header".into()));
        };
        if schema_version != REPORT_SCHEMA_VERSION {
            return Err(bad(format!("schema_version {schema_version} is not supported")));
        }
        let mut report = Self {
            kind,
            config,
            timestamp,
            rows: Vec::new(),
            summary: Value::Null,
        };
        for l in lines {
            match serde_json::from_str(l).map_err(|e| bad(e.to_string()))? {
                Line::Row { data } => report.rows.push(data),
                Line::Summary { data } => report.summary = data,
                Line::Header { .. } => return Err(bad("repeated header".into())),
            }
        }
        Ok(report)
    }

    /// Writes `<stem>.jsonl` and, when given, `<stem>.csv` into `dir`.
    pub fn write(&self, dir: &Path, stem: &str, csv: Option<&str>) -> io::Result<Vec<PathBuf>> {
        std::fs::create_dir_all(dir)?;
        let mut paths = vec![dir.join(format!("{stem}.jsonl"))];
        std::fs::write(&paths[0], self.to_jsonl())?;
        if let Some(c) = csv {
            let p = dir.join(format!("{stem}.csv"));
            std::fs::write(&p, c)?;
            paths.push(p);
        }
        Ok(paths)
    }
}

fn num(v: f64) -> String {
    format!("{v:?}")
}

fn opt(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

fn to_csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for r in rows {
        w.write_record(&r).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
}

pub fn derivcheck_summary(reports: &[DerivativeCheckReport]) -> Value {
    let passed = reports.iter().filter(|r| r.passed).count();
    json!({
        "problems": reports.len(),
        "passed": passed,
        "failed": reports.len() - passed,
        "points_checked": reports.iter().map(|r| r.points_checked).sum::<usize>(),
        "skipped_points": reports.iter().map(|r| r.skipped.len()).sum::<usize>(),
        "failing_selectors": reports.iter().map(|r| r.failures().count()).sum::<usize>(),
    })
}

pub fn derivcheck_csv(reports: &[DerivativeCheckReport]) -> String {
    let rows = reports.iter().map(|r| {
        let worst = r
            .checks
            .iter()
            .max_by(|a, b| a.worst_rel_error.total_cmp(&b.worst_rel_error));
        vec![
            r.problem.clone(),
            r.passed.to_string(),
            r.points_checked.to_string(),
            r.skipped.len().to_string(),
            worst.map(|c| c.selector.clone()).unwrap_or_default(),
            opt(worst.map(|c| c.worst_rel_error)),
        ]
    });
    to_csv(
        &["problem", "passed", "points_checked", "skipped", "worst_selector", "worst_rel_error"],
        rows,
    )
}

pub fn validation_summary(verdicts: &[ValidationVerdict]) -> Value {
    let mut by_verdict: BTreeMap<&str, usize> = [
        Verdict::Confirmed,
        Verdict::FeasibleButSuboptimal,
        Verdict::ValueMismatch,
        Verdict::Infeasible,
        Verdict::NotCheckable,
    ]
    .iter()
    .map(|v| (v.as_str(), 0))
    .collect();
    let mut findings: BTreeMap<String, usize> = BTreeMap::new();
    for v in verdicts {
        for p in &v.points {
            *by_verdict.entry(p.verdict.as_str()).or_default() += 1;
        }
        for f in &v.findings {
            let key = to_value(&f.kind).as_str().unwrap_or_default().to_string();
            *findings.entry(key).or_default() += 1;
        }
    }
    json!({
        "problems": verdicts.len(),
        "points": verdicts.iter().map(|v| v.points.len()).sum::<usize>(),
        "verdicts": by_verdict,
        "findings": findings,
        "not_checkable_problems": verdicts.iter().filter(|v| v.not_checkable.is_some()).count(),
        "claimed_optimal_failures": verdicts.iter().map(|v| v.claimed_optimal_failures().count()).sum::<usize>(),
    })
}

pub fn validation_csv(verdicts: &[ValidationVerdict]) -> String {
    let rows = verdicts.iter().flat_map(|v| {
        v.points.iter().map(move |p| {
            vec![
                v.problem.clone(),
                p.solution.to_string(),
                p.sample.map(|s| s.to_string()).unwrap_or_default(),
                p.status.as_str().to_string(),
                p.verdict.as_str().to_string(),
                num(p.upper_residual),
                num(p.lower_residual),
                opt(p.gap),
                opt(p.upper_error),
                opt(p.lower_error),
                opt(p.kkt_residual),
            ]
        })
    });
    to_csv(
        &[
            "problem",
            "solution",
            "sample",
            "status",
            "verdict",
            "upper_residual",
            "lower_residual",
            "gap",
            "upper_error",
            "lower_error",
            "kkt_residual",
        ],
        rows,
    )
}

/// Solver outcome next to the documented values, for one problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveRow {
    pub problem: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<Point>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_upper: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_lower: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper_residual: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower_residual: Option<f64>,
    pub evaluations: usize,
    pub complete: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl SolveRow {
    pub fn new(record: &ProblemRecord, outcome: &Result<SolveResult>) -> Self {
        let base = Self {
            problem: record.name.clone(),
            point: None,
            upper: None,
            lower: None,
            claimed_upper: record.claimed_upper,
            claimed_lower: record.claimed_lower,
            upper_residual: None,
            lower_residual: None,
            evaluations: 0,
            complete: false,
            error: None,
        };
        match outcome {
            Ok(r) => Self {
                point: Some(r.point.clone()),
                upper: Some(r.upper),
                lower: Some(r.lower),
                upper_residual: Some(r.upper_residual),
                lower_residual: Some(r.lower_residual),
                evaluations: r.evaluations,
                complete: r.complete,
                ..base
            },
            Err(e) => Self {
                error: Some(e.to_string()),
                ..base
            },
        }
    }
}

pub fn solve_summary(rows: &[SolveRow]) -> Value {
    let solved = rows.iter().filter(|r| r.error.is_none()).count();
    json!({
        "problems": rows.len(),
        "solved": solved,
        "failed": rows.len() - solved,
        "incomplete": rows.iter().filter(|r| r.error.is_none() && !r.complete).count(),
    })
}

pub fn solve_csv(rows: &[SolveRow]) -> String {
    let out = rows.iter().map(|r| {
        vec![
            r.problem.clone(),
            opt(r.upper),
            opt(r.lower),
            opt(r.claimed_upper),
            opt(r.claimed_lower),
            opt(r.upper_residual),
            opt(r.lower_residual),
            r.evaluations.to_string(),
            r.complete.to_string(),
            r.error.clone().unwrap_or_default(),
        ]
    });
    to_csv(
        &[
            "problem",
            "upper",
            "lower",
            "claimed_upper",
            "claimed_lower",
            "upper_residual",
            "lower_residual",
            "evaluations",
            "complete",
            "error",
        ],
        out,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jsonl_round_trip() {
        let mut r = RunReport::new(RunKind::Eval, &json!({"seed": 3}));
        r.push(&json!({"problem": "X", "value": 1.5}));
        r.set_summary(&json!({"rows": 1}));
        let back = RunReport::from_jsonl(&r.to_jsonl()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn timestamp_is_the_only_unstable_part() {
        let a = RunReport::new(RunKind::Solve, &json!({"seed": 1}));
        let mut b = a.clone();
        b.timestamp = Some("1970-01-01T00:00:00Z".into());
        assert_ne!(a.to_jsonl(), b.to_jsonl());
        assert_eq!(a.without_timestamp().to_jsonl(), b.without_timestamp().to_jsonl());
    }

    #[test]
    fn csv_quotes_commas() {
        let s = to_csv(&["a", "b"], [vec!["x,y".to_string(), "1".to_string()]]);
        assert_eq!(s, "a,b\n\"x,y\",1\n");
    }
}
