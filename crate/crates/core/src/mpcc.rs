//! Single-level KKT reformulation: the lower level is replaced by its
//! stationarity conditions with multipliers `λ` and complementarity.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Derivative, Dimensions, EvalSelector, Evaluator, Function, Point, ProblemDefinition};
use crate::tensor::Tensor;
use crate::validation::{complementarity, stationarity};

/// `(x, y, λ)` for an MPCC model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MpccPoint {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub lambda: Vec<f64>,
}

impl MpccPoint {
    pub fn new(point: Point, lambda: Vec<f64>) -> Self {
        Self {
            x: point.x,
            y: point.y,
            lambda,
        }
    }

    pub fn point(&self) -> Point {
        Point::new(self.x.clone(), self.y.clone())
    }
}

/// Residual terms of [`mpcc_residual`], kept apart for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MpccResidual {
    pub stationarity: f64,
    pub upper_feasibility: f64,
    pub lower_feasibility: f64,
    pub negativity: f64,
    pub complementarity: f64,
    pub total: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct MpccModel<'a, E: Evaluator> {
    problem: &'a E,
    dims: Dimensions,
}

/// Builds the reformulation of a twice differentiable problem.
pub fn build_mpcc(problem: &ProblemDefinition) -> Result<MpccModel<'_, ProblemDefinition>> {
    if !problem.smoothness().is_smooth() {
        return Err(Error::NotSmooth(problem.name().to_string()));
    }
    Ok(MpccModel::over(problem))
}

fn sel(func: Function, deriv: Derivative) -> EvalSelector {
    EvalSelector::new(func, deriv)
}

impl<'a, E: Evaluator> MpccModel<'a, E> {
    /// Wraps any evaluator without a smoothness check.
    pub fn over(problem: &'a E) -> Self {
        Self {
            problem,
            dims: problem.dims(),
        }
    }

    pub fn dims(&self) -> Dimensions {
        self.dims
    }

    pub fn n_multipliers(&self) -> usize {
        self.dims.n_lower
    }

    /// `n_x + n_y + n_g`.
    pub fn n_variables(&self) -> usize {
        self.dims.n_x + self.dims.n_y + self.dims.n_lower
    }

    fn check(&self, s: &MpccPoint) -> Result<Point> {
        if s.lambda.len() != self.dims.n_lower {
            return Err(Error::DimensionMismatch {
                what: "lambda",
                expected: self.dims.n_lower,
                got: s.lambda.len(),
            });
        }
        let p = s.point();
        p.check(self.dims)?;
        Ok(p)
    }

    /// `∇y f + (∇y g)ᵀ λ`.
    pub fn stationarity_map(&self, s: &MpccPoint) -> Result<Vec<f64>> {
        let p = self.check(s)?;
        let grad = self.problem.evaluate(&p, sel(Function::LowerObjective, Derivative::Dy))?;
        let jac = self.problem.evaluate(&p, sel(Function::LowerConstraints, Derivative::Dy))?;
        Ok((0..self.dims.n_y)
            .map(|k| grad.get(k, 0) + s.lambda.iter().enumerate().map(|(i, l)| jac.get(i, k) * l).sum::<f64>())
            .collect())
    }

    /// Derivative of [`Self::stationarity_map`] with respect to `(x, y, λ)`,
    /// an `n_y × (n_x + n_y + n_g)` matrix built from the second derivatives.
    pub fn stationarity_jacobian(&self, s: &MpccPoint) -> Result<Tensor> {
        let p = self.check(s)?;
        let Dimensions { n_x, n_y, n_lower: m, .. } = self.dims;
        let fxy = self.problem.evaluate(&p, sel(Function::LowerObjective, Derivative::Dxy))?;
        let fyy = self.problem.evaluate(&p, sel(Function::LowerObjective, Derivative::Dyy))?;
        let gy = self.problem.evaluate(&p, sel(Function::LowerConstraints, Derivative::Dy))?;
        let gxy = self.problem.evaluate(&p, sel(Function::LowerConstraints, Derivative::Dxy))?;
        let gyy = self.problem.evaluate(&p, sel(Function::LowerConstraints, Derivative::Dyy))?;
        let mut out = Tensor::zeros(n_y, n_x + n_y + m);
        for k in 0..n_y {
            for j in 0..n_x {
                let v = fxy.get(k, j) + (0..m).map(|i| s.lambda[i] * gxy.get(i * n_y + k, j)).sum::<f64>();
                out.set(k, j, v);
            }
            for j in 0..n_y {
                let v = fyy.get(k, j) + (0..m).map(|i| s.lambda[i] * gyy.get(i * n_y + k, j)).sum::<f64>();
                out.set(k, n_x + j, v);
            }
            for i in 0..m {
                out.set(k, n_x + n_y + i, gy.get(i, k));
            }
        }
        Ok(out)
    }

    /// Residual terms; evaluates exactly `(f, Dy)`, `(g, Value)`, `(g, Dy)` and `(G, Value)`.
    pub fn residual_terms(&self, s: &MpccPoint) -> Result<MpccResidual> {
        let p = self.check(s)?;
        let grad = self.problem.evaluate(&p, sel(Function::LowerObjective, Derivative::Dy))?;
        let g = self.problem.evaluate(&p, sel(Function::LowerConstraints, Derivative::Value))?;
        let jac = self.problem.evaluate(&p, sel(Function::LowerConstraints, Derivative::Dy))?;
        let gu = self.problem.evaluate(&p, sel(Function::UpperConstraints, Derivative::Value))?;
        let pos = |t: &Tensor| t.as_slice().iter().fold(0.0, |m: f64, v| m.max(*v));
        let stat = stationarity(grad.as_slice(), &jac, &s.lambda);
        let upper = pos(&gu);
        let lower = pos(&g);
        let negativity: f64 = s.lambda.iter().map(|l| (-l).max(0.0)).sum();
        let comp = complementarity(&s.lambda, g.as_slice());
        Ok(MpccResidual {
            stationarity: stat,
            upper_feasibility: upper,
            lower_feasibility: lower,
            negativity,
            complementarity: comp,
            total: stat + (upper + lower) + negativity + comp,
        })
    }

    /// Plain-text dump of the model and its residuals at `s`.
    pub fn dump(&self, name: &str, s: &MpccPoint) -> Result<String> {
        let r = self.residual_terms(s)?;
        let map = self.stationarity_map(s)?;
        let p = s.point();
        let gu = self.problem.evaluate(&p, sel(Function::UpperConstraints, Derivative::Value))?;
        let gl = self.problem.evaluate(&p, sel(Function::LowerConstraints, Derivative::Value))?;
        let join = |v: &[f64]| v.iter().map(|a| format!("{a:?}")).collect::<Vec<_>>().join(" ");
        let d = self.dims;
        let mut out = String::new();
        let _ = writeln!(out, "mpcc {name}");
        let _ = writeln!(out, "dims n_x={} n_y={} n_lambda={} n_G={} n_g={}", d.n_x, d.n_y, d.n_lower, d.n_upper, d.n_lower);
        let _ = writeln!(out, "x = {}", join(&s.x));
        let _ = writeln!(out, "y = {}", join(&s.y));
        let _ = writeln!(out, "lambda = {}", join(&s.lambda));
        let _ = writeln!(out, "stationarity_map = {}", join(&map));
        let _ = writeln!(out, "G = {}", join(gu.as_slice()));
        let _ = writeln!(out, "g = {}", join(gl.as_slice()));
        let _ = writeln!(out, "residual.stationarity = {:?}", r.stationarity);
        let _ = writeln!(out, "residual.upper_feasibility = {:?}", r.upper_feasibility);
        let _ = writeln!(out, "residual.lower_feasibility = {:?}", r.lower_feasibility);
        let _ = writeln!(out, "residual.negativity = {:?}", r.negativity);
        let _ = writeln!(out, "residual.complementarity = {:?}", r.complementarity);
        let _ = writeln!(out, "residual.total = {:?}", r.total);
        Ok(out)
    }
}

/// Stationarity norm plus upper/lower infeasibility, multiplier negativity
/// and complementarity violation. Zero exactly at KKT points of the
/// reformulation.
pub fn mpcc_residual<E: Evaluator>(model: &MpccModel<'_, E>, s: &MpccPoint) -> Result<f64> {
    model.residual_terms(s).map(|r| r.total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::lookup;

    #[test]
    fn negative_multiplier_is_penalised() {
        let (p, _) = lookup("MuuQuy2003Ex1").unwrap();
        let m = build_mpcc(&p).unwrap();
        assert_eq!(m.n_multipliers(), 3);
        let s = MpccPoint {
            x: vec![0.0],
            y: vec![0.0, 0.0],
            lambda: vec![-0.7, 0.0, 0.0],
        };
        assert!(mpcc_residual(&m, &s).unwrap() >= 0.7);
    }

    #[test]
    fn wrong_multiplier_count() {
        let (p, _) = lookup("MuuQuy2003Ex1").unwrap();
        let m = build_mpcc(&p).unwrap();
        let s = MpccPoint {
            x: vec![0.0],
            y: vec![0.0, 0.0],
            lambda: vec![0.0],
        };
        assert!(matches!(mpcc_residual(&m, &s), Err(Error::DimensionMismatch { .. })));
    }
}
