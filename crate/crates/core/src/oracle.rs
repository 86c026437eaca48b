//! Brute-force lower-level solver: a dense grid (or random multistart) over
//! the `y` box, refined by a feasible pattern search, with the optimistic
//! tie rule (among near-optimal `y`, prefer the smallest `F`).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::model::{Function, Interval, ProblemDefinition};
use crate::search::{pattern_search, Pattern};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleConfig {
    /// Grid points per axis for `n_y ≤ 2`, `n_y ∈ {3, 4}` and `n_y ∈ {5, 6}`.
    /// Larger lower levels use multistart only.
    pub grid: [usize; 3],
    pub multistarts: usize,
    /// Grid local minima (or multistart points) refined by local search.
    pub candidates: usize,
    pub refine_evals: usize,
    /// Constraint slack accepted as feasible.
    pub feas_tol: f64,
    /// Optimistic tie window, relative to `max(1, |f_opt|)`.
    pub tie_tol: f64,
    /// How far `f` may rise while sliding toward smaller `F` from the chosen
    /// tie, relative to `max(1, |f_opt|)`. Sliding is meant for flat optimal
    /// faces, so this sits at rounding level; anything larger lets a unique
    /// minimiser drift by `O(sqrt(slide_tol))`.
    pub slide_tol: f64,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            grid: [201, 41, 11],
            multistarts: 20,
            candidates: 6,
            refine_evals: 4000,
            feas_tol: 1e-9,
            tie_tol: 1e-8,
            slide_tol: 1e-15,
            seed: 0,
        }
    }
}

impl OracleConfig {
    /// Cheaper settings for inner solves inside an outer search.
    pub fn inner() -> Self {
        Self {
            grid: [41, 11, 5],
            multistarts: 8,
            candidates: 3,
            refine_evals: 1500,
            ..Self::default()
        }
    }

    pub fn with_resolution(mut self, points: usize) -> Self {
        self.grid[0] = points;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleMode {
    Grid,
    GridMultistart,
    Multistart,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleResult {
    /// Optimistic selection among near-optimal points.
    pub y: Vec<f64>,
    /// `f(x, y)` at the selection.
    pub f: f64,
    /// Best lower-level value found.
    pub f_min: f64,
    /// `F(x, y)` at the selection.
    pub upper: f64,
    pub mode: OracleMode,
    /// True when the lower level is too large for a grid, so the result is
    /// a multistart local search only.
    pub partial: bool,
    pub evaluations: usize,
}

/// Lower-level evaluator at a fixed `x` with a reusable scratch jet.
pub(crate) struct LowerLevel<'a> {
    p: &'a ProblemDefinition,
    x: &'a [f64],
    jet: Jet,
    tol: f64,
    pub evals: usize,
}

impl<'a> LowerLevel<'a> {
    pub fn new(p: &'a ProblemDefinition, x: &'a [f64], tol: f64) -> Self {
        let d = p.dims();
        Self {
            p,
            x,
            jet: Jet::new(d.n_x, d.n_y, 0),
            tol,
            evals: 0,
        }
    }

    /// `f(x, y)` when `y` is lower-feasible, else `None`.
    pub fn value(&mut self, y: &[f64]) -> Option<f64> {
        self.value_within(y, self.tol)
    }

    pub fn value_within(&mut self, y: &[f64], tol: f64) -> Option<f64> {
        self.evals += 1;
        if !self.p.guard_ok(self.x, y) || !self.p.constraints_within(Function::LowerConstraints, self.x, y, tol, &mut self.jet) {
            return None;
        }
        let v = self.p.objective_value(Function::LowerObjective, self.x, y, &mut self.jet);
        (!v.is_nan()).then_some(v)
    }

    pub fn upper(&mut self, y: &[f64]) -> f64 {
        self.p.objective_value(Function::UpperObjective, self.x, y, &mut self.jet)
    }
}

struct Candidate {
    y: Vec<f64>,
    f: f64,
    step: Vec<f64>,
}

fn axis(iv: &Interval, n: usize, k: usize) -> f64 {
    if n <= 1 || iv.width() == 0.0 {
        iv.mid()
    } else if k + 1 == n {
        iv.hi
    } else {
        iv.lo + iv.width() * k as f64 / (n - 1) as f64
    }
}

/// Discrete local minima of the grid (infeasible nodes count as `+∞`),
/// best `keep` first. Plateaus yield their lowest-index node.
fn grid_candidates(ll: &mut LowerLevel<'_>, bounds: &[Interval], n: usize, keep: usize) -> Vec<Candidate> {
    let ny = bounds.len();
    let n = n.max(1);
    let total = n.pow(ny as u32);
    let mut vals = vec![f64::INFINITY; total];
    let mut idx = vec![0usize; ny];
    let mut y: Vec<f64> = bounds.iter().map(|b| axis(b, n, 0)).collect();
    for slot in vals.iter_mut() {
        if let Some(v) = ll.value(&y) {
            *slot = v;
        }
        for d in 0..ny {
            idx[d] += 1;
            if idx[d] < n {
                y[d] = axis(&bounds[d], n, idx[d]);
                break;
            }
            idx[d] = 0;
            y[d] = axis(&bounds[d], n, 0);
        }
    }
    let strides: Vec<usize> = (0..ny).map(|d| n.pow(d as u32)).collect();
    let beats = |a: usize, b: usize| vals[a] < vals[b] || (vals[a] == vals[b] && a < b);
    let mut minima: Vec<usize> = (0..total)
        .filter(|&i| vals[i].is_finite())
        .filter(|&i| {
            strides.iter().all(|&s| {
                let k = (i / s) % n;
                (k == 0 || beats(i, i - s)) && (k + 1 == n || beats(i, i + s))
            })
        })
        .collect();
    minima.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]).then(a.cmp(&b)));
    minima.truncate(keep);
    let step: Vec<f64> = bounds
        .iter()
        .map(|b| if n > 1 { b.width() / (n - 1) as f64 } else { b.width() })
        .map(|s| s.max(1e-12))
        .collect();
    minima
        .into_iter()
        .map(|i| Candidate {
            y: strides.iter().zip(bounds).map(|(&s, b)| axis(b, n, (i / s) % n)).collect(),
            f: vals[i],
            step: step.clone(),
        })
        .collect()
}

fn random_candidates(ll: &mut LowerLevel<'_>, bounds: &[Interval], starts: usize, rng: &mut ChaCha8Rng) -> Vec<Candidate> {
    let mut found: Vec<(f64, Vec<f64>)> = Vec::new();
    for _ in 0..25 * starts {
        let y: Vec<f64> = bounds
            .iter()
            .map(|b| if b.width() > 0.0 { rng.random_range(b.lo..=b.hi) } else { b.lo })
            .collect();
        if let Some(v) = ll.value(&y) {
            found.push((v, y));
        }
    }
    found.sort_by(|a, b| a.0.total_cmp(&b.0));
    found.truncate(starts);
    found
        .into_iter()
        .map(|(f, y)| Candidate {
            y,
            f,
            step: bounds.iter().map(|b| (0.1 * b.width()).max(1e-12)).collect(),
        })
        .collect()
}

/// Approximates `argmin_y { f(x, y) : g(x, y) ≤ 0 }` over the problem's `y` bounds.
pub fn lower_level_oracle(problem: &ProblemDefinition, x: &[f64], cfg: &OracleConfig) -> Result<OracleResult> {
    lower_level_oracle_with(problem, x, cfg, &[], cfg.feas_tol)
}

/// As [`lower_level_oracle`], also refining from each `hint` whose
/// violation is at most `hint_tol`. This matters when the feasible set is
/// too thin for the grid to hit, such as a single point cut out by opposing
/// constraints. Search moves away from a hint still obey `cfg.feas_tol`.
pub fn lower_level_oracle_with(
    problem: &ProblemDefinition,
    x: &[f64],
    cfg: &OracleConfig,
    hints: &[Vec<f64>],
    hint_tol: f64,
) -> Result<OracleResult> {
    let dims = problem.dims();
    if x.len() != dims.n_x {
        return Err(Error::DimensionMismatch {
            what: "x",
            expected: dims.n_x,
            got: x.len(),
        });
    }
    let bounds = problem.y_bounds().to_vec();
    let ny = dims.n_y;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut ll = LowerLevel::new(problem, x, cfg.feas_tol);
    let (mode, mut cands) = match ny {
        0..=2 => (OracleMode::Grid, grid_candidates(&mut ll, &bounds, cfg.grid[0], cfg.candidates)),
        3 | 4 => (OracleMode::Grid, grid_candidates(&mut ll, &bounds, cfg.grid[1], cfg.candidates)),
        5 | 6 => {
            let mut c = grid_candidates(&mut ll, &bounds, cfg.grid[2], cfg.candidates);
            c.extend(random_candidates(&mut ll, &bounds, cfg.multistarts, &mut rng));
            (OracleMode::GridMultistart, c)
        }
        _ => (OracleMode::Multistart, random_candidates(&mut ll, &bounds, cfg.multistarts, &mut rng)),
    };
    for h in hints.iter().filter(|h| h.len() == ny) {
        if let Some(f) = ll.value_within(h, hint_tol) {
            cands.push(Candidate {
                y: h.clone(),
                f,
                step: bounds.iter().map(|b| (0.01 * b.width()).max(1e-12)).collect(),
            });
        }
    }
    if cands.is_empty() {
        // thin feasible sets can slip between grid nodes
        cands = random_candidates(&mut ll, &bounds, cfg.multistarts.max(1) * 4, &mut rng);
    }
    if cands.is_empty() {
        return Err(Error::NoFeasiblePoint(format!("{} (lower level at x = {x:?})", problem.name())));
    }

    let mut refined: Vec<(Vec<f64>, f64, Vec<f64>)> = Vec::with_capacity(cands.len());
    for (k, c) in cands.into_iter().enumerate() {
        let pattern = Pattern::new(c.step.clone(), cfg.refine_evals, cfg.seed.wrapping_add(k as u64));
        let out = pattern_search(|y| ll.value(y), &c.y, c.f, &bounds, &pattern);
        refined.push((out.z, out.value, c.step));
    }
    let f_min = refined.iter().map(|r| r.1).fold(f64::INFINITY, f64::min);
    let scale = f_min.abs().max(1.0);
    let window = f_min + cfg.tie_tol * scale;

    // optimistic selection: smallest F among near-optimal points, then
    // slide along the near-optimal set to lower F further
    let mut pick: Option<(Vec<f64>, f64, f64, Vec<f64>)> = None;
    for (y, f, step) in refined.into_iter().filter(|r| r.1 <= window) {
        let up = ll.upper(&y);
        if pick.as_ref().is_none_or(|p| up < p.1) {
            pick = Some((y, up, f, step));
        }
    }
    let (y0, up0, f0, step) = pick.expect("the minimiser itself lies in the tie window");
    let slide = (f0 + cfg.slide_tol * scale).min(window);
    let pattern = Pattern::new(step, cfg.refine_evals, cfg.seed ^ 0x5eed);
    let out = pattern_search(
        |y| match ll.value(y) {
            Some(v) if v <= slide => Some(ll.upper(y)),
            _ => None,
        },
        &y0,
        up0,
        &bounds,
        &pattern,
    );
    let f = ll.value_within(&out.z, hint_tol.max(cfg.feas_tol)).unwrap_or(f_min);
    Ok(OracleResult {
        y: out.z,
        f,
        f_min,
        upper: out.value,
        mode,
        partial: mode == OracleMode::Multistart,
        evaluations: ll.evals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::lookup;

    #[test]
    fn unconstrained_quadratic_minimum() {
        let (p, _) = lookup("HenrionSurowiec2011").unwrap();
        let r = lower_level_oracle(&p, &[-0.5], &OracleConfig::default()).unwrap();
        assert!((r.y[0] + 0.5).abs() < 1e-5, "{r:?}");
    }

    #[test]
    fn optimistic_tie_prefers_smaller_upper_objective() {
        // f = y^3 - 3y on y >= -2 ties at y = -2 and y = 1 for x = -2
        let (p, _) = lookup("Vogel2002").unwrap();
        let r = lower_level_oracle(&p, &[-2.0], &OracleConfig::default()).unwrap();
        assert!((r.y[0] + 2.0).abs() < 1e-6, "{r:?}");
        assert!((r.f + 2.0).abs() < 1e-8);
    }
}
