//! Nested multistart baseline: a pattern search over `x` where every visited
//! `x` is scored by the lower-level oracle's optimistic response.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Derivative, EvalSelector, Function, Interval, Point, ProblemDefinition};
use crate::oracle::{lower_level_oracle, OracleConfig};
use crate::search::{pattern_search, Pattern};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolveConfig {
    pub multistarts: usize,
    /// Weight on `max(0, max_i G_i)` in the outer objective.
    pub penalty: f64,
    pub seed: u64,
    /// Outer evaluations, split evenly across starts.
    pub budget: usize,
    /// Extra outer evaluations for a finer search from the best start.
    pub polish: usize,
    /// Upper and lower violation accepted in the returned point.
    pub feas_tol: f64,
    pub inner: OracleConfig,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self {
            multistarts: 50,
            penalty: 1e4,
            seed: 0,
            budget: 10_000,
            polish: 2_000,
            feas_tol: 1e-6,
            inner: OracleConfig::inner(),
        }
    }
}

impl SolveConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |detail: &str| {
            Err(Error::Invalid {
                what: "SolveConfig",
                detail: detail.into(),
            })
        };
        if self.budget == 0 {
            return bad("budget must be positive");
        }
        if !(self.penalty > 0.0) {
            return bad("penalty must be positive");
        }
        if self.multistarts == 0 {
            return bad("at least one start is required");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub start: usize,
    /// Outer evaluation count within the start when this incumbent was found.
    pub evals: usize,
    pub x: Vec<f64>,
    pub upper: f64,
    /// Penalised outer objective.
    pub merit: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveResult {
    pub problem: String,
    pub point: Point,
    pub upper: f64,
    pub lower: f64,
    pub upper_residual: f64,
    pub lower_residual: f64,
    /// Start that produced the returned point; `multistarts` denotes the polish run.
    pub best_start: usize,
    pub evaluations: usize,
    /// False when some start ran out of budget before converging.
    pub complete: bool,
    /// Feasible incumbents in start order.
    pub trace: Vec<TraceEntry>,
}

struct Scored {
    y: Vec<f64>,
    upper: f64,
    lower: f64,
    g_upper: f64,
    g_lower: f64,
    merit: f64,
}

fn max_positive(p: &ProblemDefinition, point: &Point, func: Function) -> Result<f64> {
    let t = p.evaluate(point, EvalSelector::new(func, Derivative::Value))?;
    Ok(t.as_slice().iter().fold(0.0, |m: f64, v| m.max(*v)))
}

fn score(p: &ProblemDefinition, x: &[f64], cfg: &SolveConfig) -> Option<Scored> {
    let o = lower_level_oracle(p, x, &cfg.inner).ok()?;
    let point = Point::new(x.to_vec(), o.y.clone());
    let g_upper = max_positive(p, &point, Function::UpperConstraints).ok()?;
    let g_lower = max_positive(p, &point, Function::LowerConstraints).ok()?;
    let merit = o.upper + cfg.penalty * g_upper;
    merit.is_finite().then_some(Scored {
        y: o.y,
        upper: o.upper,
        lower: o.f,
        g_upper,
        g_lower,
        merit,
    })
}

struct StartOutcome {
    best: Option<(Vec<f64>, Scored)>,
    trace: Vec<TraceEntry>,
    evals: usize,
    converged: bool,
}

fn run_start(p: &ProblemDefinition, k: usize, bounds: &[Interval], budget: usize, cfg: &SolveConfig) -> StartOutcome {
    run_from(p, k, None, 0.25, 2, bounds, budget, cfg)
}

fn run_from(
    p: &ProblemDefinition,
    k: usize,
    from: Option<&[f64]>,
    step_frac: f64,
    // random poll directions per variable
    spread: usize,
    bounds: &[Interval],
    budget: usize,
    cfg: &SolveConfig,
) -> StartOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (k as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let draw = |rng: &mut ChaCha8Rng| -> Vec<f64> {
        bounds
            .iter()
            .map(|b| if b.width() > 0.0 { rng.random_range(b.lo..=b.hi) } else { b.lo })
            .collect()
    };
    let mut out = StartOutcome {
        best: None,
        trace: Vec::new(),
        evals: 0,
        converged: false,
    };
    let mut start = match from {
        Some(x) => x.to_vec(),
        None if k == 0 => bounds.iter().map(Interval::mid).collect(),
        None => draw(&mut rng),
    };
    let mut first = None;
    while out.evals < budget.min(20) {
        out.evals += 1;
        if let Some(s) = score(p, &start, cfg) {
            first = Some(s);
            break;
        }
        start = draw(&mut rng);
    }
    let Some(first) = first else { return out };

    let consider = |x: &[f64], s: Scored, evals: usize, out: &mut StartOutcome| {
        let feasible = s.g_upper <= cfg.feas_tol && s.g_lower <= cfg.feas_tol;
        let better = out.best.as_ref().is_none_or(|(_, b)| s.upper < b.upper);
        if feasible && better {
            out.trace.push(TraceEntry {
                start: k,
                evals,
                x: x.to_vec(),
                upper: s.upper,
                merit: s.merit,
            });
            out.best = Some((x.to_vec(), s));
        }
    };
    let merit0 = first.merit;
    consider(&start, first, out.evals, &mut out);

    let step: Vec<f64> = bounds.iter().map(|b| (step_frac * b.width()).max(1e-12)).collect();
    let mut pattern = Pattern::new(step, budget.saturating_sub(out.evals), cfg.seed.wrapping_add(k as u64));
    pattern.random = spread * bounds.len().max(1);
    let used = out.evals;
    let mut seen = 0usize;
    let mut incumbents: Vec<(Vec<f64>, Scored, usize)> = Vec::new();
    let res = pattern_search(
        |x| {
            seen += 1;
            let s = score(p, x, cfg)?;
            let m = s.merit;
            if s.g_upper <= cfg.feas_tol && s.g_lower <= cfg.feas_tol {
                incumbents.push((x.to_vec(), s, used + seen));
            }
            Some(m)
        },
        &start,
        merit0,
        bounds,
        &pattern,
    );
    out.evals += res.evals;
    out.converged = res.converged;
    for (x, s, e) in incumbents {
        consider(&x, s, e, &mut out);
    }
    out
}

/// Nested multistart search for `min F(x, y(x)) s.t. G(x, y(x)) ≤ 0`, where
/// `y(x)` is the oracle's optimistic lower-level response.
pub fn solve_nested(problem: &ProblemDefinition, cfg: &SolveConfig) -> Result<SolveResult> {
    cfg.validate()?;
    let bounds = problem.x_bounds().to_vec();
    if bounds.iter().any(|b| !b.lo.is_finite() || !b.hi.is_finite()) {
        return Err(Error::Invalid {
            what: "bounds",
            detail: format!("{} has an unbounded x box", problem.name()),
        });
    }
    let per_start = (cfg.budget / cfg.multistarts).max(1);
    let mut runs: Vec<StartOutcome> = (0..cfg.multistarts)
        .into_par_iter()
        .map(|k| run_start(problem, k, &bounds, per_start, cfg))
        .collect();
    if cfg.polish > 0 {
        let best = runs
            .iter()
            .filter_map(|r| r.best.as_ref())
            .min_by(|a, b| a.1.upper.total_cmp(&b.1.upper))
            .map(|(x, _)| x.clone());
        if let Some(x) = best {
            // dense random polling gets into thin wedges at active vertices
            runs.push(run_from(problem, cfg.multistarts, Some(&x), 0.01, 16, &bounds, cfg.polish, cfg));
        }
    }

    let evaluations = runs.iter().map(|r| r.evals).sum();
    let complete = runs.iter().all(|r| r.converged);
    let mut best: Option<(usize, &Vec<f64>, &Scored)> = None;
    for (k, r) in runs.iter().enumerate() {
        if let Some((x, s)) = &r.best {
            if best.is_none_or(|(_, _, b)| s.upper < b.upper) {
                best = Some((k, x, s));
            }
        }
    }
    let Some((best_start, x, s)) = best else {
        return Err(Error::NoFeasiblePoint(format!("{}: no feasible point in {evaluations} outer evaluations", problem.name())));
    };
    let result = SolveResult {
        problem: problem.name().to_string(),
        point: Point::new(x.clone(), s.y.clone()),
        upper: s.upper,
        lower: s.lower,
        upper_residual: s.g_upper,
        lower_residual: s.g_lower,
        best_start,
        evaluations,
        complete,
        trace: Vec::new(),
    };
    Ok(SolveResult {
        trace: runs.into_iter().flat_map(|r| r.trace).collect(),
        ..result
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::lookup;

    #[test]
    fn rejects_bad_config() {
        let (p, _) = lookup("Bard1988Ex1").unwrap();
        let cfg = SolveConfig {
            budget: 0,
            ..SolveConfig::default()
        };
        assert!(matches!(solve_nested(&p, &cfg), Err(Error::Invalid { .. })));
    }

    #[test]
    fn small_run_is_feasible() {
        let (p, _) = lookup("HenrionSurowiec2011").unwrap();
        let cfg = SolveConfig {
            multistarts: 4,
            budget: 400,
            ..SolveConfig::default()
        };
        let r = solve_nested(&p, &cfg).unwrap();
        assert!(r.upper_residual <= 1e-6 && r.lower_residual <= 1e-6);
        assert!(!r.trace.is_empty());
    }
}
