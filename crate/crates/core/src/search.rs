//! Derivative-free local search and a nonnegative least-squares solver.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::Interval;

/// Settings for [`pattern_search`].
#[derive(Debug, Clone)]
pub(crate) struct Pattern {
    /// Initial step per coordinate.
    pub step: Vec<f64>,
    /// The search stops once the step multiplier falls below this.
    pub min_scale: f64,
    pub max_evals: usize,
    /// Also poll the `±e_i ± e_j` directions.
    pub diagonals: bool,
    /// Random unit directions added to every poll, which lets the search
    /// slide along oblique active constraints.
    pub random: usize,
    pub seed: u64,
}

impl Pattern {
    pub fn new(step: Vec<f64>, max_evals: usize, seed: u64) -> Self {
        let n = step.len();
        Self {
            step,
            min_scale: 1e-9,
            max_evals,
            diagonals: n <= 4,
            random: 2 * n.max(1),
            seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct SearchOutcome {
    pub z: Vec<f64>,
    pub value: f64,
    pub evals: usize,
    pub converged: bool,
}

fn fixed_directions(n: usize, diagonals: bool) -> Vec<Vec<f64>> {
    let unit = |pairs: &[(usize, f64)]| {
        let mut d = vec![0.0; n];
        for &(i, s) in pairs {
            d[i] = s;
        }
        d
    };
    let mut dirs = Vec::new();
    for i in 0..n {
        dirs.push(unit(&[(i, 1.0)]));
        dirs.push(unit(&[(i, -1.0)]));
    }
    if diagonals {
        for i in 0..n {
            for k in i + 1..n {
                for (si, sk) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
                    dirs.push(unit(&[(i, si), (k, sk)]));
                }
            }
        }
    }
    dirs
}

/// Compass search with random polling, minimising `obj` inside `bounds`.
/// `obj` returns `None` at infeasible points, which never replace the
/// incumbent. `start` must be feasible with value `start_value`.
pub(crate) fn pattern_search(
    mut obj: impl FnMut(&[f64]) -> Option<f64>,
    start: &[f64],
    start_value: f64,
    bounds: &[Interval],
    cfg: &Pattern,
) -> SearchOutcome {
    let n = start.len();
    let fixed = fixed_directions(n, cfg.diagonals);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut z = start.to_vec();
    let mut value = start_value;
    let mut scale = 1.0;
    let mut evals = 0;
    let mut trial = z.clone();
    let mut last: Option<Vec<f64>> = None;
    let mut dirs: Vec<Vec<f64>> = Vec::with_capacity(fixed.len() + cfg.random + 1);
    while scale >= cfg.min_scale {
        if evals >= cfg.max_evals {
            return SearchOutcome {
                z,
                value,
                evals,
                converged: false,
            };
        }
        dirs.clear();
        dirs.extend(last.take());
        dirs.extend(fixed.iter().cloned());
        for _ in 0..cfg.random {
            let mut d: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
            let norm = d.iter().map(|v| v * v).sum::<f64>().sqrt();
            if norm > 1e-12 {
                d.iter_mut().for_each(|v| *v /= norm);
                dirs.push(d);
            }
        }
        let mut improved = false;
        for d in &dirs {
            let mut moved = false;
            for i in 0..n {
                let v = bounds[i].clamp(z[i] + d[i] * scale * cfg.step[i]);
                moved |= v != z[i];
                trial[i] = v;
            }
            if !moved {
                continue;
            }
            evals += 1;
            if let Some(v) = obj(&trial) {
                if v < value {
                    z.copy_from_slice(&trial);
                    value = v;
                    last = Some(d.clone());
                    improved = true;
                    break;
                }
            }
            if evals >= cfg.max_evals {
                break;
            }
        }
        scale = if improved { (2.0 * scale).min(1.0) } else { 0.5 * scale };
    }
    SearchOutcome {
        z,
        value,
        evals,
        converged: true,
    }
}

/// Nonnegative least squares `min ‖A λ − b‖₂, λ ≥ 0` by the Lawson–Hanson
/// active-set method.
pub fn nnls(a: &DMatrix<f64>, b: &DVector<f64>) -> DVector<f64> {
    let n = a.ncols();
    let mut x = DVector::zeros(n);
    if n == 0 {
        return x;
    }
    let norm = a.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
    let tol = 10.0 * f64::EPSILON * norm * (a.nrows().max(n) as f64);
    let mut passive = vec![false; n];
    let solve = |passive: &[bool]| -> DVector<f64> {
        let idx: Vec<usize> = (0..n).filter(|&j| passive[j]).collect();
        let sub = a.select_columns(&idx);
        let sol = sub
            .svd(true, true)
            .solve(b, 1e-14)
            .unwrap_or_else(|_| DVector::zeros(idx.len()));
        let mut z = DVector::zeros(n);
        for (k, &j) in idx.iter().enumerate() {
            z[j] = sol[k];
        }
        z
    };
    for _ in 0..3 * n + 3 {
        let w = a.transpose() * (b - a * &x);
        let next = (0..n)
            .filter(|&j| !passive[j] && w[j] > tol)
            .max_by(|&i, &k| w[i].total_cmp(&w[k]));
        let Some(j) = next else { break };
        passive[j] = true;
        let mut z = solve(&passive);
        for _ in 0..3 * n + 3 {
            if (0..n).all(|j| !passive[j] || z[j] > 0.0) {
                break;
            }
            let alpha = (0..n)
                .filter(|&j| passive[j] && z[j] <= 0.0)
                .map(|j| {
                    let d = x[j] - z[j];
                    if d > 0.0 {
                        x[j] / d
                    } else {
                        0.0
                    }
                })
                .fold(f64::INFINITY, f64::min);
            x += (&z - &x) * alpha;
            for j in 0..n {
                if passive[j] && x[j] <= tol {
                    passive[j] = false;
                    x[j] = 0.0;
                }
            }
            z = solve(&passive);
        }
        x = z;
    }
    x.iter_mut().for_each(|v| *v = v.max(0.0));
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nnls_interior_solution_matches_least_squares() {
        let a = DMatrix::from_row_slice(3, 2, &[1.0, 0.0, 0.0, 1.0, 1.0, 1.0]);
        let b = DVector::from_row_slice(&[1.0, 2.0, 3.0]);
        let x = nnls(&a, &b);
        assert!((x[0] - 1.0).abs() < 1e-12 && (x[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn nnls_clamps_negative_direction() {
        let a = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 1.0]);
        let b = DVector::from_row_slice(&[-1.0, 2.0]);
        let x = nnls(&a, &b);
        assert_eq!(x[0], 0.0);
        assert!((x[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn compass_search_finds_box_constrained_minimum() {
        let bounds = [Interval::new(-1.0, 1.0), Interval::new(-1.0, 1.0)];
        let cfg = Pattern::new(vec![0.25, 0.25], 10_000, 1);
        let f = |z: &[f64]| Some((z[0] - 2.0).powi(2) + (z[1] - 0.3).powi(2));
        let out = pattern_search(f, &[0.0, 0.0], f(&[0.0, 0.0]).unwrap(), &bounds, &cfg);
        assert!(out.converged);
        assert!((out.z[0] - 1.0).abs() < 1e-9 && (out.z[1] - 0.3).abs() < 1e-8);
    }

    #[test]
    fn compass_search_slides_along_oblique_constraint() {
        // min -y0 - y1 subject to y0 + 2 y1 <= 2, y >= 0: optimum (2, 0)
        let bounds = [Interval::new(0.0, 5.0), Interval::new(0.0, 5.0)];
        let cfg = Pattern::new(vec![0.5, 0.5], 10_000, 1);
        let f = |z: &[f64]| (z[0] + 2.0 * z[1] <= 2.0).then(|| -z[0] - z[1]);
        let out = pattern_search(f, &[0.0, 1.0], -1.0, &bounds, &cfg);
        assert!((out.value + 2.0).abs() < 1e-6, "{out:?}");
    }
}
