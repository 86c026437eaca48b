//! Finite-difference verification of the analytic derivatives.
//!
//! First derivatives are central differences of values. Second derivatives
//! are central differences of the analytic first derivatives, which keeps
//! the truncation error near `h²` instead of `h`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{shape_of, Derivative, EvalSelector, Function, Interval, Point, ProblemDefinition};
use crate::tensor::Tensor;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FdConfig {
    /// Relative step: `h_i = eps * max(1, |v_i|)`.
    pub eps: f64,
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Points that must be checked per problem (skipped draws do not count).
    pub samples: usize,
    pub seed: u64,
}

impl Default for FdConfig {
    fn default() -> Self {
        Self {
            eps: 1e-6,
            rel_tol: 1e-4,
            abs_tol: 1e-6,
            samples: 20,
            seed: 7,
        }
    }
}

impl FdConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |detail: String| Err(Error::Invalid { what: "fd config", detail });
        if !(self.eps > 0.0 && self.rel_tol > 0.0 && self.abs_tol > 0.0) {
            return bad(format!("eps {} / rel_tol {} / abs_tol {} must be positive", self.eps, self.rel_tol, self.abs_tol));
        }
        if self.samples == 0 {
            return bad("samples must be at least 1".into());
        }
        Ok(())
    }
}

/// Which block of variables a first difference is taken in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Wrt {
    X,
    Y,
}

fn step(eps: f64, v: f64) -> f64 {
    eps * v.abs().max(1.0)
}

fn perturbed(problem: &ProblemDefinition, point: &Point, wrt: Wrt, k: usize, h: f64) -> Result<Point> {
    let mut p = point.clone();
    let (slot, offset) = match wrt {
        Wrt::X => (&mut p.x[k], k),
        Wrt::Y => (&mut p.y[k], problem.dims().n_x + k),
    };
    *slot += h;
    let v = *slot;
    let iv = problem.domain_box()[offset];
    if !iv.contains(v) {
        return Err(Error::DomainViolation {
            problem: problem.name().to_string(),
            detail: format!("finite-difference stencil leaves the domain box at coordinate {offset} ({v} not in [{}, {}])", iv.lo, iv.hi),
        });
    }
    Ok(p)
}

fn width(problem: &ProblemDefinition, wrt: Wrt) -> usize {
    match wrt {
        Wrt::X => problem.dims().n_x,
        Wrt::Y => problem.dims().n_y,
    }
}

fn coord(point: &Point, wrt: Wrt, k: usize) -> f64 {
    match wrt {
        Wrt::X => point.x[k],
        Wrt::Y => point.y[k],
    }
}

/// Central difference of `base`'s entries along every coordinate of `wrt`.
/// Column `k` of the result (per row of `base`) is the derivative along coordinate `k`.
fn difference(problem: &ProblemDefinition, point: &Point, base: EvalSelector, wrt: Wrt, eps: f64) -> Result<Vec<Tensor>> {
    let n = width(problem, wrt);
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        let h = step(eps, coord(point, wrt, k));
        let plus = problem.evaluate(&perturbed(problem, point, wrt, k, h)?, base)?;
        let minus = problem.evaluate(&perturbed(problem, point, wrt, k, -h)?, base)?;
        let d: Vec<f64> = plus.as_slice().iter().zip(minus.as_slice()).map(|(p, m)| (p - m) / (2.0 * h)).collect();
        cols.push(Tensor::from_row_major(plus.rows(), plus.cols(), d));
    }
    Ok(cols)
}

/// Central-difference first derivative of `func` with respect to `wrt`,
/// shaped as the matching `Dx`/`Dy` selector.
pub fn fd_first(problem: &ProblemDefinition, point: &Point, func: Function, wrt: Wrt, eps: f64) -> Result<Tensor> {
    point.check(problem.dims())?;
    let deriv = match wrt {
        Wrt::X => Derivative::Dx,
        Wrt::Y => Derivative::Dy,
    };
    let sel = EvalSelector::new(func, deriv);
    let (rows, cols) = shape_of(problem.dims(), sel);
    if rows == 0 {
        return Ok(Tensor::empty());
    }
    let diffs = difference(problem, point, EvalSelector::new(func, Derivative::Value), wrt, eps)?;
    let mut out = Tensor::zeros(rows, cols);
    for (k, d) in diffs.iter().enumerate() {
        for i in 0..d.rows() {
            if func.is_constraint() {
                out.set(i, k, d.get(i, 0));
            } else {
                out.set(k, 0, d.get(0, 0));
            }
        }
    }
    Ok(out)
}

/// Second derivative block `pair ∈ {Dxx, Dxy, Dyy}` by differencing the
/// analytic gradient. Entry `(a, b)` of a block is `∂/∂col_b (∂/∂row_a)`,
/// so `Dxy` differentiates the `y`-gradient along `x`.
pub fn fd_second(problem: &ProblemDefinition, point: &Point, func: Function, pair: Derivative, eps: f64) -> Result<Tensor> {
    point.check(problem.dims())?;
    let (grad, wrt) = match pair {
        Derivative::Dxx => (Derivative::Dx, Wrt::X),
        Derivative::Dxy => (Derivative::Dy, Wrt::X),
        Derivative::Dyy => (Derivative::Dy, Wrt::Y),
        other => {
            return Err(Error::Invalid {
                what: "second-derivative pair",
                detail: other.key().to_string(),
            })
        }
    };
    let sel = EvalSelector::new(func, pair);
    let (rows, cols) = shape_of(problem.dims(), sel);
    if rows == 0 {
        return Ok(Tensor::empty());
    }
    let r = width(problem, if grad == Derivative::Dx { Wrt::X } else { Wrt::Y });
    let diffs = difference(problem, point, EvalSelector::new(func, grad), wrt, eps)?;
    let mut out = Tensor::zeros(rows, cols);
    for (k, d) in diffs.iter().enumerate() {
        if func.is_constraint() {
            // d is m × r: row i holds the gradient of constraint i
            for i in 0..d.rows() {
                for a in 0..r {
                    out.set(i * r + a, k, d.get(i, a));
                }
            }
        } else {
            for a in 0..r {
                out.set(a, k, d.get(a, 0));
            }
        }
    }
    Ok(out)
}

/// Finite-difference estimate for any non-value selector.
pub fn fd_estimate(problem: &ProblemDefinition, point: &Point, sel: EvalSelector, eps: f64) -> Result<Tensor> {
    match sel.deriv {
        Derivative::Value => problem.evaluate(point, sel),
        Derivative::Dx => fd_first(problem, point, sel.func, Wrt::X, eps),
        Derivative::Dy => fd_first(problem, point, sel.func, Wrt::Y, eps),
        d => fd_second(problem, point, sel.func, d, eps),
    }
}

/// Rows of one component's block within a selector's tensor.
fn block_rows(problem: &ProblemDefinition, sel: EvalSelector) -> usize {
    let d = problem.dims();
    if !sel.func.is_constraint() {
        return shape_of(d, sel).0;
    }
    match sel.deriv {
        Derivative::Value | Derivative::Dx | Derivative::Dy => 1,
        Derivative::Dxx => d.n_x,
        Derivative::Dxy | Derivative::Dyy => d.n_y,
    }
}

/// Comparison of an analytic tensor with its estimate, scaled per component block.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Discrepancy {
    pub abs: f64,
    /// Largest `abs / max(scale, abs_tol / rel_tol)` over entries; passing means `≤ rel_tol`.
    pub rel: f64,
    pub pass: bool,
}

pub fn compare(analytic: &Tensor, estimate: &Tensor, block: usize, rel_tol: f64, abs_tol: f64) -> Discrepancy {
    let mut worst = Discrepancy {
        abs: 0.0,
        rel: 0.0,
        pass: true,
    };
    let cols = analytic.cols();
    let block = block.max(1);
    for start in (0..analytic.rows()).step_by(block) {
        let rows = start..(start + block).min(analytic.rows());
        let mut scale = 0.0f64;
        for r in rows.clone() {
            for c in 0..cols {
                scale = scale.max(analytic.get(r, c).abs()).max(estimate.get(r, c).abs());
            }
        }
        let floor = scale.max(abs_tol / rel_tol);
        for r in rows {
            for c in 0..cols {
                let e = (analytic.get(r, c) - estimate.get(r, c)).abs();
                let e = if e.is_nan() { f64::INFINITY } else { e };
                worst.abs = worst.abs.max(e);
                worst.rel = worst.rel.max(e / floor);
                if e > (rel_tol * scale).max(abs_tol) {
                    worst.pass = false;
                }
            }
        }
    }
    worst
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelectorCheck {
    pub selector: String,
    pub points_checked: usize,
    pub worst_rel_error: f64,
    pub worst_abs_error: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub worst_at: Option<Point>,
    pub shape_mismatch: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SkipReason {
    NonsmoothPoint,
    DomainViolation,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkippedPoint {
    pub point: Point,
    pub reason: SkipReason,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DerivativeCheckReport {
    pub problem: String,
    pub points_checked: usize,
    pub draws: usize,
    pub checks: Vec<SelectorCheck>,
    pub skipped: Vec<SkippedPoint>,
    pub passed: bool,
}

impl DerivativeCheckReport {
    pub fn failures(&self) -> impl Iterator<Item = &SelectorCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Stable 64-bit FNV-1a, used to give each problem its own sample stream.
fn fnv(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

/// Per-problem generator derived from the run seed and the problem name.
pub fn problem_rng(seed: u64, name: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ fnv(name))
}

/// Uniform point in `sbox`, kept a few steps away from each face.
pub fn sample_point(rng: &mut impl Rng, sbox: &[Interval], n_x: usize, eps: f64) -> Point {
    let z: Vec<f64> = sbox
        .iter()
        .map(|iv| {
            let m = 4.0 * step(eps, iv.lo.abs().max(iv.hi.abs()));
            let (lo, hi) = if iv.width() > 2.0 * m { (iv.lo + m, iv.hi - m) } else { (iv.mid(), iv.mid()) };
            if hi > lo {
                rng.random_range(lo..hi)
            } else {
                lo
            }
        })
        .collect();
    Point::new(&z[..n_x], &z[n_x..])
}

/// Non-value selectors in display order.
pub fn derivative_selectors() -> impl Iterator<Item = EvalSelector> {
    EvalSelector::all().filter(|s| s.deriv != Derivative::Value)
}

/// Checks every non-value selector at `config.samples` seeded points.
pub fn check_problem(problem: &ProblemDefinition, config: &FdConfig) -> DerivativeCheckReport {
    let mut rng = problem_rng(config.seed, problem.name());
    let sbox = problem.sampling_box();
    let n_x = problem.dims().n_x;
    let mut checks: Vec<SelectorCheck> = derivative_selectors()
        .map(|s| SelectorCheck {
            selector: s.to_string(),
            points_checked: 0,
            worst_rel_error: 0.0,
            worst_abs_error: 0.0,
            worst_at: None,
            shape_mismatch: false,
            passed: true,
        })
        .collect();
    let mut skipped = Vec::new();
    let mut checked = 0;
    let mut draws = 0;
    let max_draws = 20 * config.samples;
    while checked < config.samples && draws < max_draws {
        draws += 1;
        let point = sample_point(&mut rng, &sbox, n_x, config.eps);
        let stencil = point.x.iter().chain(&point.y).map(|v| 4.0 * step(config.eps, *v)).fold(0.0, f64::max);
        if problem.near_kink(&point, stencil) {
            skipped.push(SkippedPoint {
                point,
                reason: SkipReason::NonsmoothPoint,
                detail: "within the finite-difference stencil of a nondifferentiable point".into(),
            });
            continue;
        }
        let outcome: Result<Vec<(Tensor, Tensor)>> = derivative_selectors()
            .map(|sel| Ok((problem.evaluate(&point, sel)?, fd_estimate(problem, &point, sel, config.eps)?)))
            .collect();
        let pairs = match outcome {
            Ok(p) => p,
            Err(e) => {
                skipped.push(SkippedPoint {
                    point,
                    reason: SkipReason::DomainViolation,
                    detail: e.to_string(),
                });
                continue;
            }
        };
        checked += 1;
        for ((sel, check), (analytic, estimate)) in derivative_selectors().zip(checks.iter_mut()).zip(pairs) {
            check.points_checked += 1;
            let expected = shape_of(problem.dims(), sel);
            if analytic.shape() != expected || estimate.shape() != expected {
                check.shape_mismatch = true;
                check.passed = false;
                continue;
            }
            let d = compare(&analytic, &estimate, block_rows(problem, sel), config.rel_tol, config.abs_tol);
            if d.rel > check.worst_rel_error || check.worst_at.is_none() {
                check.worst_rel_error = d.rel.max(check.worst_rel_error);
                check.worst_at = Some(point.clone());
            }
            check.worst_abs_error = check.worst_abs_error.max(d.abs);
            check.passed &= d.pass;
        }
    }
    let passed = checked > 0 && checks.iter().all(|c| c.passed);
    DerivativeCheckReport {
        problem: problem.name().to_string(),
        points_checked: checked,
        draws,
        checks,
        skipped,
        passed,
    }
}

/// Runs [`check_problem`] over many problems in parallel; output follows input order.
pub fn check_all(problems: &[ProblemDefinition], config: &FdConfig) -> Vec<DerivativeCheckReport> {
    problems.par_iter().map(|p| check_problem(p, config)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::lookup;

    #[test]
    fn quadratic_first_difference_is_near_exact() {
        let (p, _) = lookup("ShimizuEtal1997a").unwrap();
        let pt = Point::new(vec![4.0], vec![0.0]);
        let fx = fd_first(&p, &pt, Function::UpperObjective, Wrt::X, 1e-6).unwrap();
        assert!((fx.get(0, 0) + 2.0).abs() < 1e-6);
        let gyy = fd_second(&p, &pt, Function::LowerConstraints, Derivative::Dyy, 1e-6).unwrap();
        assert_eq!(gyy.shape(), (3, 1));
        assert!(gyy.max_abs() < 1e-9);
    }

    #[test]
    fn compare_scales_per_block() {
        let a = Tensor::from_row_major(2, 1, vec![1e6, 1e-3]);
        let b = Tensor::from_row_major(2, 1, vec![1e6 + 1.0, 1e-3 + 1e-5]);
        // block of one row each: the small row fails on its own scale
        assert!(!compare(&a, &b, 1, 1e-4, 1e-6).pass);
        assert!(compare(&a, &b, 2, 1e-4, 1e-6).pass);
    }

    #[test]
    fn stencil_leaving_the_box_is_a_domain_violation() {
        let (p, _) = lookup("ShimizuEtal1997a").unwrap();
        let edge = p.domain_box()[0].hi;
        let pt = Point::new(vec![edge], vec![0.0]);
        let err = fd_first(&p, &pt, Function::UpperObjective, Wrt::X, 1e-6).unwrap_err();
        assert!(matches!(err, Error::DomainViolation { .. }));
    }
}
