//! Checks documented solutions against the formulas: feasibility at both
//! levels, claimed objective values, membership in the lower-level argmin
//! (via the brute-force oracle) and, where meaningful, the lower-level KKT
//! residual.

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Derivative, EvalSelector, Function, Point, ProblemDefinition};
use crate::oracle::{lower_level_oracle_with, OracleConfig};
use crate::registry::{KnownSolution, ProblemRecord, SolutionStatus};
use crate::search::nnls;
use crate::tensor::Tensor;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub feasibility: f64,
    /// Claimed values must match within `value_rel * (1 + |claim|)`.
    pub value_rel: f64,
    pub gap: f64,
    /// Constraints with `|g_i|` at most this enter the KKT fit.
    pub active: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            feasibility: 1e-6,
            value_rel: 1e-3,
            gap: 1e-3,
            active: 1e-6,
        }
    }
}

fn sel(func: Function, deriv: Derivative) -> EvalSelector {
    EvalSelector::new(func, deriv)
}

fn positive_part_max(t: &Tensor) -> f64 {
    t.as_slice().iter().fold(0.0, |m, &v| if v.is_nan() { f64::INFINITY } else { m.max(v) })
}

/// `(max(0, max_i G_i), max(0, max_i g_i))`; zero for empty blocks.
pub fn feasibility(problem: &ProblemDefinition, point: &Point) -> Result<(f64, f64)> {
    let upper = problem.evaluate(point, sel(Function::UpperConstraints, Derivative::Value))?;
    let lower = problem.evaluate(point, sel(Function::LowerConstraints, Derivative::Value))?;
    Ok((positive_part_max(&upper), positive_part_max(&lower)))
}

/// `‖∇y f + (∇y g)ᵀ λ‖₂`, summed in a fixed order so that callers sharing
/// the inputs get bit-identical results.
pub(crate) fn stationarity(grad: &[f64], jac: &Tensor, lambda: &[f64]) -> f64 {
    let mut s = 0.0;
    for (k, gk) in grad.iter().enumerate() {
        let mut r = *gk;
        for (i, l) in lambda.iter().enumerate() {
            r += jac.get(i, k) * l;
        }
        s += r * r;
    }
    s.sqrt()
}

/// `Σ |λ_i g_i|`.
pub(crate) fn complementarity(lambda: &[f64], g: &[f64]) -> f64 {
    lambda.iter().zip(g).map(|(l, v)| (l * v).abs()).sum()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KktFit {
    pub residual: f64,
    pub stationarity: f64,
    /// `max(0, max_i g_i)`.
    pub infeasibility: f64,
    pub complementarity: f64,
    /// One multiplier per lower constraint; zero off the active set.
    pub multipliers: Vec<f64>,
    pub active: Vec<usize>,
}

/// Fits nonnegative multipliers on the active lower constraints by NNLS and
/// reports stationarity, primal infeasibility and complementarity.
pub fn kkt_fit(problem: &ProblemDefinition, point: &Point, active_tol: f64) -> Result<KktFit> {
    let grad = problem.evaluate(point, sel(Function::LowerObjective, Derivative::Dy))?;
    let g = problem.evaluate(point, sel(Function::LowerConstraints, Derivative::Value))?;
    let jac = problem.evaluate(point, sel(Function::LowerConstraints, Derivative::Dy))?;
    let ny = problem.dims().n_y;
    let m = g.rows();
    let active: Vec<usize> = (0..m).filter(|&i| g.get(i, 0).abs() <= active_tol).collect();
    let a = DMatrix::from_fn(ny, active.len(), |k, j| jac.get(active[j], k));
    let b = DVector::from_fn(ny, |k, _| -grad.get(k, 0));
    let fit = nnls(&a, &b);
    let mut multipliers = vec![0.0; m];
    for (j, &i) in active.iter().enumerate() {
        multipliers[i] = fit[j];
    }
    let stat = stationarity(grad.as_slice(), &jac, &multipliers);
    let comp = complementarity(&multipliers, g.as_slice());
    let infeasibility = g.as_slice().iter().fold(0.0, |m: f64, v| m.max(*v));
    Ok(KktFit {
        residual: stat + infeasibility + comp,
        stationarity: stat,
        infeasibility,
        complementarity: comp,
        multipliers,
        active,
    })
}

/// KKT residual of the lower level at `point`, for problems where it is meaningful.
pub fn kkt_residual(problem: &ProblemDefinition, record: &ProblemRecord, point: &Point, active_tol: f64) -> Result<f64> {
    if !record.flags.lower_level_kkt_checkable {
        return Err(Error::NotCheckable {
            problem: problem.name().to_string(),
            reason: "lower-level KKT conditions are not appropriate for this problem".into(),
        });
    }
    if problem.near_kink(point, 0.0) {
        return Err(Error::NotCheckable {
            problem: problem.name().to_string(),
            reason: "point lies on a nondifferentiability".into(),
        });
    }
    kkt_fit(problem, point, active_tol).map(|k| k.residual)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Confirmed,
    FeasibleButSuboptimal,
    ValueMismatch,
    Infeasible,
    NotCheckable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Confirmed => "confirmed",
            Verdict::FeasibleButSuboptimal => "feasible_but_suboptimal",
            Verdict::ValueMismatch => "value_mismatch",
            Verdict::Infeasible => "infeasible",
            Verdict::NotCheckable => "not_checkable",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingKind {
    /// A stated point violates a constraint.
    Infeasible,
    /// A stated `y` is beaten by the oracle at the stated `x`.
    NotLowerOptimal,
    /// A claimed value differs from the value computed at the stated point.
    ValueDiscrepancy,
    /// Two claims for the same quantity disagree.
    ClaimConflict,
    /// A claimed value comes without a point and cannot be checked here.
    UnverifiedClaim,
    /// The oracle or evaluation could not assess a point.
    Unassessed,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Finding {
    pub kind: FindingKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solution: Option<usize>,
    /// `F`, `f`, `G`, `g` or `gap`.
    pub quantity: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub observed: Option<f64>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointCheck {
    /// Index into the record's known solutions.
    pub solution: usize,
    pub status: SolutionStatus,
    /// Position along a solution family (0 = start, 1 = midpoint, 2 = end).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sample: Option<usize>,
    pub point: Point,
    pub upper_residual: f64,
    pub lower_residual: f64,
    pub upper_value: f64,
    pub lower_value: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper_error: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower_error: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_f: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_y: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gap: Option<f64>,
    pub oracle_partial: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kkt_residual: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multipliers: Option<Vec<f64>>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationVerdict {
    pub problem: String,
    pub points: Vec<PointCheck>,
    pub findings: Vec<Finding>,
    /// Set when the problem as a whole has nothing checkable.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub not_checkable: Option<String>,
}

impl ValidationVerdict {
    /// Points with status global or best-known that fail feasibility or
    /// lower-level optimality.
    pub fn claimed_optimal_failures(&self) -> impl Iterator<Item = &PointCheck> {
        self.points.iter().filter(|p| {
            p.status.is_claimed_optimal() && matches!(p.verdict, Verdict::Infeasible | Verdict::FeasibleButSuboptimal | Verdict::NotCheckable)
        })
    }

    pub fn passed(&self) -> bool {
        self.claimed_optimal_failures().next().is_none()
    }
}

fn within(value: f64, claim: f64, rel: f64) -> bool {
    (value - claim).abs() <= rel * (1.0 + claim.abs())
}

fn check_point(
    problem: &ProblemDefinition,
    record: &ProblemRecord,
    index: usize,
    sol: &KnownSolution,
    sample: Option<usize>,
    point: Point,
    tol: &Tolerances,
    oracle: &OracleConfig,
    findings: &mut Vec<Finding>,
) -> PointCheck {
    let mut check = PointCheck {
        solution: index,
        status: sol.status,
        sample,
        point: point.clone(),
        upper_residual: 0.0,
        lower_residual: 0.0,
        upper_value: f64::NAN,
        lower_value: f64::NAN,
        upper_error: None,
        lower_error: None,
        oracle_f: None,
        oracle_y: None,
        gap: None,
        oracle_partial: false,
        kkt_residual: None,
        multipliers: None,
        verdict: Verdict::NotCheckable,
        detail: String::new(),
    };
    let unassessed = |check: &mut PointCheck, findings: &mut Vec<Finding>, detail: String| {
        findings.push(Finding {
            kind: FindingKind::Unassessed,
            solution: Some(index),
            quantity: "point".into(),
            claimed: None,
            observed: None,
            detail: detail.clone(),
        });
        check.detail = detail;
    };
    let values = (|| -> Result<(f64, f64, f64, f64)> {
        let (u, l) = feasibility(problem, &point)?;
        let fu = problem.evaluate(&point, sel(Function::UpperObjective, Derivative::Value))?;
        let fl = problem.evaluate(&point, sel(Function::LowerObjective, Derivative::Value))?;
        Ok((u, l, fu.get(0, 0), fl.get(0, 0)))
    })();
    let (u, l, fu, fl) = match values {
        Ok(v) => v,
        Err(e) => {
            unassessed(&mut check, findings, e.to_string());
            return check;
        }
    };
    check.upper_residual = u;
    check.lower_residual = l;
    check.upper_value = fu;
    check.lower_value = fl;

    let rel = sol.value_tol.unwrap_or(tol.value_rel);
    let mut value_ok = true;
    for (quantity, claim, value, slot) in [
        ("F", sol.claimed_upper, fu, &mut check.upper_error),
        ("f", sol.claimed_lower, fl, &mut check.lower_error),
    ] {
        let Some(c) = claim else { continue };
        *slot = Some((value - c).abs());
        if !within(value, c, rel) {
            value_ok = false;
            findings.push(Finding {
                kind: FindingKind::ValueDiscrepancy,
                solution: Some(index),
                quantity: quantity.into(),
                claimed: Some(c),
                observed: Some(value),
                detail: format!("{quantity} at the stated point is {value}, claimed {c} (tolerance {rel} relative)"),
            });
        }
    }

    for (quantity, r) in [("G", u), ("g", l)] {
        if r > tol.feasibility {
            findings.push(Finding {
                kind: FindingKind::Infeasible,
                solution: Some(index),
                quantity: quantity.into(),
                claimed: None,
                observed: Some(r),
                detail: format!("largest {quantity} violation {r:e} exceeds {:e}", tol.feasibility),
            });
        }
    }

    match lower_level_oracle_with(problem, &point.x, oracle, std::slice::from_ref(&point.y), tol.feasibility) {
        Ok(o) => {
            let gap = (fl - o.f_min).max(0.0);
            check.oracle_f = Some(o.f_min);
            check.oracle_partial = o.partial;
            check.gap = Some(gap);
            if gap > tol.gap {
                findings.push(Finding {
                    kind: FindingKind::NotLowerOptimal,
                    solution: Some(index),
                    quantity: "gap".into(),
                    claimed: Some(fl),
                    observed: Some(o.f_min),
                    detail: format!("f = {fl} at the stated y, but {} is reachable at y = {:?}", o.f_min, o.y),
                });
            }
            check.oracle_y = Some(o.y);
        }
        Err(e) => unassessed(&mut check, findings, e.to_string()),
    }

    if record.flags.lower_level_kkt_checkable && l <= tol.feasibility && !problem.near_kink(&point, 0.0) {
        if let Ok(k) = kkt_fit(problem, &point, tol.active) {
            check.kkt_residual = Some(k.residual);
            check.multipliers = Some(k.multipliers);
        }
    }

    check.verdict = if u > tol.feasibility || l > tol.feasibility {
        Verdict::Infeasible
    } else if check.gap.is_none() {
        Verdict::NotCheckable
    } else if check.gap.is_some_and(|g| g > tol.gap) {
        Verdict::FeasibleButSuboptimal
    } else if !value_ok {
        Verdict::ValueMismatch
    } else {
        Verdict::Confirmed
    };
    check
}

/// Disagreeing claims for the same quantity across value-only entries; the
/// first listed claim is taken as the reference.
fn claim_conflicts(record: &ProblemRecord, tol: &Tolerances, findings: &mut Vec<Finding>) {
    let value_only: Vec<(usize, &KnownSolution)> = record
        .known_solutions
        .iter()
        .enumerate()
        .filter(|(_, s)| s.status == SolutionStatus::ValueOnly)
        .collect();
    for (quantity, get) in [
        ("F", (|s: &KnownSolution| s.claimed_upper) as fn(&KnownSolution) -> Option<f64>),
        ("f", |s: &KnownSolution| s.claimed_lower),
    ] {
        let Some(&(_, first)) = value_only.iter().find(|(_, s)| get(s).is_some()) else {
            continue;
        };
        let reference = get(first).expect("filtered");
        for &(i, s) in &value_only {
            if let Some(c) = get(s) {
                if !within(c, reference, tol.value_rel) {
                    findings.push(Finding {
                        kind: FindingKind::ClaimConflict,
                        solution: Some(i),
                        quantity: quantity.into(),
                        claimed: Some(c),
                        observed: Some(reference),
                        detail: format!("claimed {quantity}* = {c} disagrees with the reference claim {reference}"),
                    });
                }
            }
        }
    }
}

/// Validates every documented solution of one problem.
pub fn validate(problem: &ProblemDefinition, record: &ProblemRecord, tol: &Tolerances, oracle: &OracleConfig) -> ValidationVerdict {
    let mut findings = Vec::new();
    let mut points = Vec::new();
    claim_conflicts(record, tol, &mut findings);
    for (i, sol) in record.known_solutions.iter().enumerate() {
        if sol.point.is_none() {
            for (quantity, claim) in [("F", sol.claimed_upper), ("f", sol.claimed_lower)] {
                if let Some(c) = claim {
                    findings.push(Finding {
                        kind: FindingKind::UnverifiedClaim,
                        solution: Some(i),
                        quantity: quantity.into(),
                        claimed: Some(c),
                        observed: None,
                        detail: "claimed value without a point; compare with a solver run".into(),
                    });
                }
            }
            continue;
        }
        let samples = sol.sample_points();
        let family = sol.is_family();
        for (k, p) in samples.into_iter().enumerate() {
            let sample = family.then_some(k);
            points.push(check_point(problem, record, i, sol, sample, p, tol, oracle, &mut findings));
        }
    }
    let not_checkable = if record.flags.no_optimal_solution {
        Some("no_optimal_solution".to_string())
    } else if record.known_solutions.is_empty() {
        Some("solution_unknown".to_string())
    } else if points.is_empty() {
        Some("value_only".to_string())
    } else {
        None
    };
    ValidationVerdict {
        problem: record.name.clone(),
        points,
        findings,
        not_checkable,
    }
}

/// Validates several problems in parallel; output follows input order.
pub fn validate_all(items: &[(ProblemDefinition, ProblemRecord)], tol: &Tolerances, oracle: &OracleConfig) -> Vec<ValidationVerdict> {
    items.par_iter().map(|(p, r)| validate(p, r, tol, oracle)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::lookup;

    #[test]
    fn empty_upper_block_has_zero_residual() {
        let (p, _) = lookup("ShimizuEtal1997a").unwrap();
        let (u, _) = feasibility(&p, &Point::new(vec![5.0], vec![2.0])).unwrap();
        assert_eq!(u, 0.0);
    }

    #[test]
    fn stationarity_and_complementarity_basics() {
        let jac = Tensor::from_row_major(1, 1, vec![-1.0]);
        assert_eq!(stationarity(&[1.0], &jac, &[1.0]), 0.0);
        assert_eq!(complementarity(&[2.0, 0.0], &[-0.5, -3.0]), 1.0);
    }
}
