//! Suite runs. Each run's configuration struct is echoed verbatim into the
//! report header, so `--from-report` can rebuild the same run.

use std::path::Path;

use bilevel_core::derivcheck::{check_all, FdConfig};
use bilevel_core::oracle::OracleConfig;
use bilevel_core::registry::{instantiate_with_record, param_specs};
use bilevel_core::report::{self, RunKind, RunReport, SolveRow};
use bilevel_core::solver::{solve_nested, SolveConfig};
use bilevel_core::validation::{validate_all, Tolerances};
use bilevel_core::{list, Params, ProblemDefinition, ProblemRecord};
use serde::{Deserialize, Serialize};

use crate::Fail;

pub(crate) enum Outcome {
    Success,
    /// Some check did not pass: exit 1.
    Failures,
}

pub(crate) fn parse_params(kv: &[String]) -> Result<Params, Fail> {
    kv.iter()
        .map(|s| {
            let (k, v) = s
                .split_once('=')
                .ok_or_else(|| Fail::Usage(format!("`{s}` is not of the form name=value")))?;
            let v: f64 = v.trim().parse().map_err(|_| Fail::Usage(format!("`{v}` is not a number")))?;
            Ok((k.trim().to_string(), v))
        })
        .collect()
}

/// `None` selects the whole suite; `Some(vec![])` selects nothing.
pub(crate) fn split_names(only: Option<&[String]>) -> Option<Vec<String>> {
    only.map(|v| {
        v.iter()
            .flat_map(|s| s.split(|c: char| c == ',' || c.is_whitespace()))
            .filter(|s| !s.is_empty())
            .map(str::to_string)
            .collect()
    })
}

/// Problems in name order. Overrides go to the problems that declare them;
/// a key no selected problem declares is an error.
fn select(only: Option<&[String]>, params: &Params) -> Result<Vec<(ProblemDefinition, ProblemRecord)>, Fail> {
    let mut names: Vec<String> = match only {
        Some(v) => v.to_vec(),
        None => list(None),
    };
    names.sort();
    names.dedup();
    let mut used = std::collections::BTreeSet::new();
    let mut out = Vec::with_capacity(names.len());
    for name in &names {
        let specs = param_specs(name)?;
        let mine: Params = params
            .iter()
            .filter(|(k, _)| specs.iter().any(|s| s.name == k.as_str()))
            .map(|(k, v)| (k.clone(), *v))
            .collect();
        used.extend(mine.keys().cloned());
        out.push(instantiate_with_record(name, &mine)?);
    }
    if let Some(k) = params.keys().find(|k| !names.is_empty() && !used.contains(*k)) {
        return Err(Fail::Usage(format!("no selected problem has a parameter `{k}`")));
    }
    Ok(out)
}

fn write(rep: &RunReport, dir: &Path, csv: &str) -> Result<(), Fail> {
    let paths = rep
        .write(dir, rep.kind.as_str(), Some(csv))
        .map_err(|e| Fail::Usage(format!("{}: {e}", dir.display())))?;
    for p in paths {
        eprintln!("wrote {}", p.display());
    }
    outln!("{}", rep.summary);
    Ok(())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub(crate) struct DerivRun {
    pub fd: FdConfig,
    pub only: Option<Vec<String>>,
    pub params: Params,
}

impl DerivRun {
    pub fn execute(&self, dir: &Path) -> Result<Outcome, Fail> {
        self.fd.validate()?;
        let items = select(self.only.as_deref(), &self.params)?;
        let problems: Vec<ProblemDefinition> = items.into_iter().map(|(p, _)| p).collect();
        let reports = check_all(&problems, &self.fd);
        let mut rep = RunReport::new(RunKind::Derivcheck, self);
        for r in &reports {
            rep.push(r);
            for c in r.failures() {
                outln!(
                    "{} {} FAIL worst relative error {:e}{}",
                    r.problem,
                    c.selector,
                    c.worst_rel_error,
                    if c.shape_mismatch { " (shape mismatch)" } else { "" }
                );
            }
            if !r.skipped.is_empty() {
                outln!("{} skipped {} draws", r.problem, r.skipped.len());
            }
        }
        rep.set_summary(&report::derivcheck_summary(&reports));
        write(&rep, dir, &report::derivcheck_csv(&reports))?;
        Ok(if reports.iter().all(|r| r.passed) {
            Outcome::Success
        } else {
            Outcome::Failures
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub(crate) struct ValidateRun {
    pub tolerances: Tolerances,
    pub oracle: OracleConfig,
    pub only: Option<Vec<String>>,
    pub params: Params,
}

impl ValidateRun {
    pub fn execute(&self, dir: &Path) -> Result<Outcome, Fail> {
        let items = select(self.only.as_deref(), &self.params)?;
        let verdicts = validate_all(&items, &self.tolerances, &self.oracle);
        let mut rep = RunReport::new(RunKind::Validate, self);
        for v in &verdicts {
            rep.push(v);
            if let Some(reason) = &v.not_checkable {
                outln!("{} not_checkable ({reason})", v.problem);
            }
            for p in &v.points {
                let tag = match p.sample {
                    Some(k) => format!("{}#{}.{k}", v.problem, p.solution),
                    None => format!("{}#{}", v.problem, p.solution),
                };
                outln!("{tag} {} {}", p.status, p.verdict.as_str());
            }
        }
        rep.set_summary(&report::validation_summary(&verdicts));
        write(&rep, dir, &report::validation_csv(&verdicts))?;
        Ok(if verdicts.iter().all(|v| v.passed()) {
            Outcome::Success
        } else {
            Outcome::Failures
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub(crate) struct SolveRun {
    pub solve: SolveConfig,
    pub problems: Vec<String>,
    pub params: Params,
}

impl SolveRun {
    pub fn execute(&self, dir: &Path) -> Result<Outcome, Fail> {
        self.solve.validate()?;
        let items = select(Some(&self.problems), &self.params)?;
        let mut rep = RunReport::new(RunKind::Solve, self);
        let mut rows = Vec::new();
        for (p, r) in &items {
            let out = solve_nested(p, &self.solve);
            let row = SolveRow::new(r, &out);
            match &out {
                Ok(s) => outln!(
                    "{} F = {} f = {} x = {:?} y = {:?} claimed F* = {} f* = {}{}",
                    r.name,
                    s.upper,
                    s.lower,
                    s.point.x,
                    s.point.y,
                    show(r.claimed_upper),
                    show(r.claimed_lower),
                    if s.complete { "" } else { " (incomplete)" }
                ),
                Err(e) => outln!("{} error: {e}", r.name),
            }
            rep.push(&row);
            rows.push(row);
        }
        rep.set_summary(&report::solve_summary(&rows));
        write(&rep, dir, &report::solve_csv(&rows))?;
        Ok(if rows.iter().all(|r| r.error.is_none()) {
            Outcome::Success
        } else {
            Outcome::Failures
        })
    }
}

pub(crate) fn show(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}
