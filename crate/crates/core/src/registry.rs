//! Problem registry: metadata records, known solutions and parameter binding.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::catalog::{self, Built, Entry};
use crate::error::{Error, Result};
use crate::model::{Derivative, Dimensions, EvalSelector, Function, Params, Point, ProblemDefinition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    N,
    L,
    O,
}

impl Label {
    pub fn as_char(self) -> char {
        match self {
            Label::N => 'N',
            Label::L => 'L',
            Label::O => 'O',
        }
    }
}

/// N/L/O labels of `F`, `G`, `f`, `g`, rendered as `N-O-N-L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Labels(pub [Label; 4]);

impl Labels {
    pub fn get(&self, func: Function) -> Label {
        self.0[func as usize]
    }
}

impl fmt::Display for Labels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0.map(Label::as_char);
        write!(f, "{a}-{b}-{c}-{d}")
    }
}

impl FromStr for Labels {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('-').collect();
        let bad = || Error::Invalid {
            what: "labels",
            detail: format!("`{s}` (expected four of N/L/O joined by '-')"),
        };
        if parts.len() != 4 {
            return Err(bad());
        }
        let mut out = [Label::O; 4];
        for (slot, p) in out.iter_mut().zip(parts) {
            *slot = match p {
                "N" => Label::N,
                "L" => Label::L,
                "O" => Label::O,
                _ => return Err(bad()),
            };
        }
        Ok(Labels(out))
    }
}

impl Serialize for Labels {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Labels {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolutionStatus {
    Global,
    Local,
    BestKnown,
    Approximate,
    ValueOnly,
    None,
}

impl SolutionStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolutionStatus::Global => "global",
            SolutionStatus::Local => "local",
            SolutionStatus::BestKnown => "best_known",
            SolutionStatus::Approximate => "approximate",
            SolutionStatus::ValueOnly => "value_only",
            SolutionStatus::None => "none",
        }
    }

    /// Statuses whose points must validate as bilevel-feasible and lower-level optimal.
    pub fn is_claimed_optimal(self) -> bool {
        matches!(self, SolutionStatus::Global | SolutionStatus::BestKnown)
    }
}

impl fmt::Display for SolutionStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A documented solution: a point, a segment of points (`point` to `point_end`),
/// or claimed values alone.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KnownSolution {
    pub status: SolutionStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<Point>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point_end: Option<Point>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_upper: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_lower: Option<f64>,
    /// Tolerance factor on claimed values when the stated figures are rounded.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value_tol: Option<f64>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl KnownSolution {
    pub fn is_family(&self) -> bool {
        self.point_end.is_some()
    }

    /// Points to validate: the point itself, or both ends and the midpoint of a family.
    pub fn sample_points(&self) -> Vec<Point> {
        match (&self.point, &self.point_end) {
            (Some(a), Some(b)) => {
                let mid = |u: &[f64], v: &[f64]| -> Vec<f64> { u.iter().zip(v).map(|(p, q)| 0.5 * (p + q)).collect() };
                vec![a.clone(), Point::new(mid(&a.x, &b.x), mid(&a.y, &b.y)), b.clone()]
            }
            (Some(a), None) => vec![a.clone()],
            _ => Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub default: f64,
    /// Lower bound and whether it is attained.
    pub min: Option<(f64, bool)>,
    pub requirement: &'static str,
}

impl ParamSpec {
    pub fn check(&self, problem: &str, value: f64) -> Result<()> {
        let ok = value.is_finite()
            && match self.min {
                Some((m, true)) => value >= m,
                Some((m, false)) => value > m,
                None => true,
            };
        if ok {
            Ok(())
        } else {
            Err(Error::ParameterOutOfRange {
                problem: problem.to_string(),
                param: self.name.to_string(),
                value,
                requirement: self.requirement,
            })
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordFlags {
    pub has_equality_origin: bool,
    pub nonsmooth: bool,
    pub lower_level_kkt_checkable: bool,
    pub no_optimal_solution: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamValue {
    pub name: String,
    pub value: f64,
    pub requirement: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemRecord {
    pub name: String,
    pub source: String,
    pub labels: Labels,
    pub dims: Dimensions,
    /// Equality counts before splitting (`n_H`, `n_h`).
    pub n_eq_upper: usize,
    pub n_eq_lower: usize,
    pub params: Vec<ParamValue>,
    pub known_solutions: Vec<KnownSolution>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_upper: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_lower: Option<f64>,
    pub flags: RecordFlags,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ProblemRecord {
    pub fn param(&self, name: &str) -> Option<f64> {
        self.params.iter().find(|p| p.name == name).map(|p| p.value)
    }
}

struct Registered {
    name: String,
    entry: Entry,
    record: ProblemRecord,
    definition: ProblemDefinition,
}

fn registry() -> &'static [Registered] {
    static REG: OnceLock<Vec<Registered>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut out: Vec<Registered> = catalog::entries()
            .into_iter()
            .map(|entry| {
                let built = (entry.build)(&Params::new());
                let (definition, record) = finish(built);
                Registered {
                    name: record.name.clone(),
                    entry,
                    record,
                    definition,
                }
            })
            .collect();
        out.sort_by(|a, b| a.name.cmp(&b.name));
        for w in out.windows(2) {
            assert_ne!(w[0].name, w[1].name, "duplicate problem name");
        }
        out
    })
}

fn find(name: &str) -> Result<&'static Registered> {
    let reg = registry();
    reg.binary_search_by(|r| r.name.as_str().cmp(name))
        .map(|i| &reg[i])
        .map_err(|_| Error::UnknownProblem(name.to_string()))
}

/// Number of registered problems.
pub fn count() -> usize {
    registry().len()
}

/// Problem and record with default parameters.
pub fn lookup(name: &str) -> Result<(ProblemDefinition, ProblemRecord)> {
    let r = find(name)?;
    Ok((r.definition.clone(), r.record.clone()))
}

pub fn record(name: &str) -> Result<&'static ProblemRecord> {
    find(name).map(|r| &r.record)
}

/// All records in name order.
pub fn records() -> impl Iterator<Item = &'static ProblemRecord> {
    registry().iter().map(|r| &r.record)
}

/// Names in lexicographic order, optionally filtered.
pub fn list(filter: Option<&dyn Fn(&ProblemRecord) -> bool>) -> Vec<String> {
    registry()
        .iter()
        .filter(|r| filter.is_none_or(|f| f(&r.record)))
        .map(|r| r.name.clone())
        .collect()
}

/// Declared parameters of a problem with their defaults and ranges.
pub fn param_specs(name: &str) -> Result<Vec<ParamSpec>> {
    let r = find(name)?;
    Ok((r.entry.build)(&Params::new()).param_specs)
}

/// Builds a problem with parameter overrides; unspecified parameters keep their defaults.
pub fn instantiate(name: &str, overrides: &Params) -> Result<ProblemDefinition> {
    instantiate_with_record(name, overrides).map(|(d, _)| d)
}

/// As [`instantiate`], also returning the record (whose solutions may depend on parameters).
pub fn instantiate_with_record(name: &str, overrides: &Params) -> Result<(ProblemDefinition, ProblemRecord)> {
    let r = find(name)?;
    if overrides.is_empty() {
        return Ok((r.definition.clone(), r.record.clone()));
    }
    let specs = param_specs(name)?;
    for (k, &v) in overrides {
        let spec = specs.iter().find(|s| s.name == k).ok_or_else(|| Error::UnknownParameter {
            problem: name.to_string(),
            param: k.clone(),
        })?;
        spec.check(name, v)?;
    }
    Ok(finish((r.entry.build)(overrides)))
}

fn finish(built: Built) -> (ProblemDefinition, ProblemRecord) {
    let def = built.definition;
    let meta = built.meta;
    let labels = meta.label_override.unwrap_or_else(|| derive_labels(&def));
    let params = built
        .param_specs
        .iter()
        .map(|s| ParamValue {
            name: s.name.to_string(),
            value: def.param(s.name).unwrap_or(s.default),
            requirement: s.requirement.to_string(),
        })
        .collect();
    let record = ProblemRecord {
        name: def.name().to_string(),
        source: meta.source.to_string(),
        labels,
        dims: def.dims(),
        n_eq_upper: meta.n_eq.0,
        n_eq_lower: meta.n_eq.1,
        params,
        known_solutions: meta.solutions,
        claimed_upper: meta.claimed.0,
        claimed_lower: meta.claimed.1,
        flags: RecordFlags {
            has_equality_origin: meta.n_eq != (0, 0),
            nonsmooth: !def.smoothness().is_smooth(),
            lower_level_kkt_checkable: meta.kkt_checkable,
            no_optimal_solution: meta.no_optimal_solution,
        },
        notes: meta.notes,
    };
    (def, record)
}

/// A function is labelled linear when its Hessian blocks vanish at a few
/// interior points of the sampling box.
fn derive_labels(def: &ProblemDefinition) -> Labels {
    let sbox = def.sampling_box();
    let n_x = def.dims().n_x;
    let fracs = [0.31, 0.57, 0.83];
    let points: Vec<Point> = fracs
        .iter()
        .enumerate()
        .map(|(k, &t)| {
            let z: Vec<f64> = sbox
                .iter()
                .enumerate()
                .map(|(i, iv)| {
                    let s = (t + 0.13 * (i + k) as f64).fract();
                    iv.lo + s * iv.width()
                })
                .collect();
            Point::new(&z[..n_x], &z[n_x..])
        })
        .filter(|p| def.check_domain(p).is_ok())
        .collect();
    let mut out = [Label::O; 4];
    for (slot, func) in out.iter_mut().zip(Function::ALL) {
        if !def.has(func) {
            continue;
        }
        let nonlinear = points.iter().any(|p| {
            [Derivative::Dxx, Derivative::Dxy, Derivative::Dyy].into_iter().any(|d| {
                def.evaluate(p, EvalSelector::new(func, d))
                    .map(|t| t.max_abs() != 0.0)
                    .unwrap_or(false)
            })
        });
        *slot = if nonlinear { Label::N } else { Label::L };
    }
    Labels(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_round_trip() {
        let l: Labels = "N-O-L-N".parse().unwrap();
        assert_eq!(l.to_string(), "N-O-L-N");
        assert!("N-O-L".parse::<Labels>().is_err());
        assert!("N-O-L-Q".parse::<Labels>().is_err());
    }

    #[test]
    fn family_samples_ends_and_midpoint() {
        let s = KnownSolution {
            status: SolutionStatus::Global,
            point: Some(Point::new(vec![0.1], vec![0.5])),
            point_end: Some(Point::new(vec![1.0], vec![0.5])),
            claimed_upper: None,
            claimed_lower: None,
            value_tol: None,
            note: String::new(),
        };
        let pts = s.sample_points();
        assert_eq!(pts.len(), 3);
        assert!((pts[1].x[0] - 0.55).abs() < 1e-15);
    }

    #[test]
    fn param_ranges() {
        let rho = ParamSpec {
            name: "rho",
            default: 1.0,
            min: Some((1.0, true)),
            requirement: "rho >= 1",
        };
        assert!(rho.check("P", 1.0).is_ok());
        assert!(rho.check("P", 0.5).is_err());
        let m = ParamSpec {
            name: "M",
            default: 10.0,
            min: Some((1.0, false)),
            requirement: "M > 1",
        };
        assert!(m.check("P", 1.0).is_err());
        assert!(m.check("P", f64::NAN).is_err());
    }
}
