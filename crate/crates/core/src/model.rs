//! Bilevel problem data model, the `(func, deriv)` selector and the shape contract.
//!
//! Every problem is held in inequality-only form
//!
//! ```text
//! min_{x,y} F(x,y)  s.t.  G(x,y) ≤ 0,  y ∈ argmin_y { f(x,y) : g(x,y) ≤ 0 }
//! ```
//!
//! Objective derivatives are columns (`∇x F ∈ ℝ^{n_x}`), the mixed Hessian
//! `∇²xy F` is `n_y × n_x`, constraint Jacobians have one row per constraint,
//! and constraint Hessians are per-row blocks stacked in constraint order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jet::{Component, Jet};
use crate::tensor::Tensor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Dimensions {
    pub n_x: usize,
    pub n_y: usize,
    /// Number of upper-level inequality rows (`n_G`).
    pub n_upper: usize,
    /// Number of lower-level inequality rows (`n_g`).
    pub n_lower: usize,
}

impl Dimensions {
    pub fn new(n_x: usize, n_y: usize, n_upper: usize, n_lower: usize) -> Self {
        Self {
            n_x,
            n_y,
            n_upper,
            n_lower,
        }
    }

    pub fn n(&self) -> usize {
        self.n_x + self.n_y
    }

    pub fn constraint_count(&self, func: Function) -> usize {
        match func {
            Function::UpperConstraints => self.n_upper,
            Function::LowerConstraints => self.n_lower,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
}

impl Point {
    pub fn new(x: impl Into<Vec<f64>>, y: impl Into<Vec<f64>>) -> Self {
        Self {
            x: x.into(),
            y: y.into(),
        }
    }

    /// Splits a stacked `(x, y)` vector.
    pub fn from_stacked(dims: Dimensions, z: &[f64]) -> Result<Self> {
        if z.len() != dims.n() {
            return Err(Error::DimensionMismatch {
                what: "stacked point",
                expected: dims.n(),
                got: z.len(),
            });
        }
        Ok(Self::new(&z[..dims.n_x], &z[dims.n_x..]))
    }

    pub fn stacked(&self) -> Vec<f64> {
        self.x.iter().chain(&self.y).copied().collect()
    }

    pub fn check(&self, dims: Dimensions) -> Result<()> {
        if self.x.len() != dims.n_x {
            return Err(Error::DimensionMismatch {
                what: "x",
                expected: dims.n_x,
                got: self.x.len(),
            });
        }
        if self.y.len() != dims.n_y {
            return Err(Error::DimensionMismatch {
                what: "y",
                expected: dims.n_y,
                got: self.y.len(),
            });
        }
        Ok(())
    }
}

/// Which of the four problem functions is evaluated (`keyf`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Function {
    UpperObjective,
    UpperConstraints,
    LowerObjective,
    LowerConstraints,
}

impl Function {
    pub const ALL: [Function; 4] = [
        Function::UpperObjective,
        Function::UpperConstraints,
        Function::LowerObjective,
        Function::LowerConstraints,
    ];

    pub fn key(self) -> char {
        match self {
            Function::UpperObjective => 'F',
            Function::UpperConstraints => 'G',
            Function::LowerObjective => 'f',
            Function::LowerConstraints => 'g',
        }
    }

    pub fn is_constraint(self) -> bool {
        matches!(self, Function::UpperConstraints | Function::LowerConstraints)
    }

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.key())
    }
}

impl FromStr for Function {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F" => Ok(Function::UpperObjective),
            "G" => Ok(Function::UpperConstraints),
            "f" => Ok(Function::LowerObjective),
            "g" => Ok(Function::LowerConstraints),
            _ => Err(Error::Invalid {
                what: "function key",
                detail: format!("`{s}` (expected one of F, G, f, g)"),
            }),
        }
    }
}

/// Derivative order and variables (`keyxy`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Derivative {
    Value,
    Dx,
    Dy,
    Dxx,
    Dxy,
    Dyy,
}

impl Derivative {
    pub const ALL: [Derivative; 6] = [
        Derivative::Value,
        Derivative::Dx,
        Derivative::Dy,
        Derivative::Dxx,
        Derivative::Dxy,
        Derivative::Dyy,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Derivative::Value => "",
            Derivative::Dx => "x",
            Derivative::Dy => "y",
            Derivative::Dxx => "xx",
            Derivative::Dxy => "xy",
            Derivative::Dyy => "yy",
        }
    }

    pub fn order(self) -> u8 {
        match self {
            Derivative::Value => 0,
            Derivative::Dx | Derivative::Dy => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for Derivative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Derivative::Value => f.write_str("[]"),
            d => f.write_str(d.key()),
        }
    }
}

impl FromStr for Derivative {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "" | "[]" | "none" => Ok(Derivative::Value),
            "x" => Ok(Derivative::Dx),
            "y" => Ok(Derivative::Dy),
            "xx" => Ok(Derivative::Dxx),
            "xy" => Ok(Derivative::Dxy),
            "yy" => Ok(Derivative::Dyy),
            _ => Err(Error::Invalid {
                what: "derivative key",
                detail: format!("`{s}` (expected one of x, y, xx, xy, yy or none)"),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EvalSelector {
    pub func: Function,
    pub deriv: Derivative,
}

impl EvalSelector {
    pub fn new(func: Function, deriv: Derivative) -> Self {
        Self { func, deriv }
    }

    /// All 24 selectors, functions outermost.
    pub fn all() -> impl Iterator<Item = EvalSelector> {
        Function::ALL
            .into_iter()
            .flat_map(|f| Derivative::ALL.into_iter().map(move |d| EvalSelector::new(f, d)))
    }
}

impl fmt::Display for EvalSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.func.key(), self.deriv.key())
    }
}

/// The `(rows, cols)` mandated for a selector; `(0, 0)` is the empty result.
pub fn shape_of(dims: Dimensions, sel: EvalSelector) -> (usize, usize) {
    let (nx, ny) = (dims.n_x, dims.n_y);
    let m = match sel.func {
        Function::UpperObjective | Function::LowerObjective => {
            return match sel.deriv {
                Derivative::Value => (1, 1),
                Derivative::Dx => (nx, 1),
                Derivative::Dy => (ny, 1),
                Derivative::Dxx => (nx, nx),
                Derivative::Dxy => (ny, nx),
                Derivative::Dyy => (ny, ny),
            };
        }
        Function::UpperConstraints => dims.n_upper,
        Function::LowerConstraints => dims.n_lower,
    };
    if m == 0 {
        return (0, 0);
    }
    match sel.deriv {
        Derivative::Value => (m, 1),
        Derivative::Dx => (m, nx),
        Derivative::Dy => (m, ny),
        Derivative::Dxx => (m * nx, nx),
        Derivative::Dxy => (m * ny, nx),
        Derivative::Dyy => (m * ny, ny),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        Self { lo, hi }
    }

    pub fn contains(&self, v: f64) -> bool {
        v >= self.lo && v <= self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn clamp(&self, v: f64) -> f64 {
        v.clamp(self.lo, self.hi)
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        if lo <= hi {
            Interval { lo, hi }
        } else {
            Interval { lo, hi: lo }
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Smoothness {
    pub nonsmooth_objective: bool,
    pub piecewise: bool,
    pub domain_restricted: bool,
}

impl Smoothness {
    pub fn is_smooth(&self) -> bool {
        !self.nonsmooth_objective && !self.piecewise
    }
}

pub type Params = BTreeMap<String, f64>;

/// Natural-domain test; `Err(detail)` when a formula is undefined at the point.
pub type DomainGuard = Arc<dyn Fn(&[f64], &[f64]) -> std::result::Result<(), String> + Send + Sync>;

/// Distance (in the argument's own units) to the nearest point where some
/// formula is not differentiable.
pub type KinkDistance = Arc<dyn Fn(&[f64], &[f64]) -> f64 + Send + Sync>;

/// Anything that answers `(point, selector)` queries under the shape contract.
pub trait Evaluator {
    fn dims(&self) -> Dimensions;
    fn evaluate(&self, point: &Point, sel: EvalSelector) -> Result<Tensor>;
}

/// One bilevel program with analytic derivatives of every order up to two.
#[derive(Clone)]
pub struct ProblemDefinition {
    pub(crate) name: String,
    pub(crate) dims: Dimensions,
    pub(crate) params: Params,
    pub(crate) domain_box: Vec<Interval>,
    pub(crate) bounds: Vec<Interval>,
    pub(crate) smoothness: Smoothness,
    pub(crate) funcs: [Vec<Component>; 4],
    pub(crate) guard: Option<DomainGuard>,
    pub(crate) kink: Option<KinkDistance>,
    pub(crate) kink_tol: f64,
}

impl fmt::Debug for ProblemDefinition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProblemDefinition")
            .field("name", &self.name)
            .field("dims", &self.dims)
            .field("params", &self.params)
            .field("smoothness", &self.smoothness)
            .finish_non_exhaustive()
    }
}

impl ProblemDefinition {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dims(&self) -> Dimensions {
        self.dims
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn param(&self, key: &str) -> Option<f64> {
        self.params.get(key).copied()
    }

    /// Box on which every formula is finite; sampling happens inside it.
    pub fn domain_box(&self) -> &[Interval] {
        &self.domain_box
    }

    /// Variable bounds implied by the constraints (or a default search box
    /// where the constraints leave a variable free).
    pub fn bounds(&self) -> &[Interval] {
        &self.bounds
    }

    pub fn x_bounds(&self) -> &[Interval] {
        &self.bounds[..self.dims.n_x]
    }

    pub fn y_bounds(&self) -> &[Interval] {
        &self.bounds[self.dims.n_x..]
    }

    /// Box used for derivative sampling: the domain box intersected with the bounds.
    pub fn sampling_box(&self) -> Vec<Interval> {
        self.domain_box
            .iter()
            .zip(&self.bounds)
            .map(|(d, b)| d.intersect(b))
            .collect()
    }

    pub fn smoothness(&self) -> Smoothness {
        self.smoothness
    }

    /// True when the point lies within `margin` of a nondifferentiability, or
    /// within the problem's own kink tolerance.
    pub fn near_kink(&self, point: &Point, margin: f64) -> bool {
        match &self.kink {
            Some(k) => k(&point.x, &point.y) < margin.max(self.kink_tol),
            None => false,
        }
    }

    pub fn kink_distance(&self, point: &Point) -> Option<f64> {
        self.kink.as_ref().map(|k| k(&point.x, &point.y))
    }

    pub fn has(&self, func: Function) -> bool {
        !self.funcs[func.slot()].is_empty()
    }

    pub fn check_domain(&self, point: &Point) -> Result<()> {
        if let Some(guard) = &self.guard {
            guard(&point.x, &point.y).map_err(|detail| Error::DomainViolation {
                problem: self.name.clone(),
                detail,
            })?;
        }
        Ok(())
    }

    /// Evaluates one selector; see the module docs for the shape contract.
    pub fn evaluate(&self, point: &Point, sel: EvalSelector) -> Result<Tensor> {
        point.check(self.dims)?;
        self.check_domain(point)?;
        Ok(self.evaluate_unchecked(&point.x, &point.y, sel))
    }

    fn evaluate_unchecked(&self, x: &[f64], y: &[f64], sel: EvalSelector) -> Tensor {
        let comps = &self.funcs[sel.func.slot()];
        let (nx, ny) = (self.dims.n_x, self.dims.n_y);
        let (rows, cols) = shape_of(self.dims, sel);
        if rows == 0 {
            return Tensor::empty();
        }
        let mut jet = Jet::new(nx, ny, sel.deriv.order());
        let mut out = Tensor::zeros(rows, cols);
        for (i, comp) in comps.iter().enumerate() {
            jet.reset(sel.deriv.order());
            comp(x, y, &mut jet);
            write_block(&jet, sel, i, sel.func.is_constraint(), &mut out);
        }
        out
    }

    /// Value of a scalar objective, reusing `jet` as scratch. Skips the domain guard.
    pub(crate) fn objective_value(&self, func: Function, x: &[f64], y: &[f64], jet: &mut Jet) -> f64 {
        jet.reset(0);
        (self.funcs[func.slot()][0])(x, y, jet);
        jet.value()
    }

    /// True when every constraint of `func` is at most `tol`; stops at the first violation.
    pub(crate) fn constraints_within(&self, func: Function, x: &[f64], y: &[f64], tol: f64, jet: &mut Jet) -> bool {
        for comp in &self.funcs[func.slot()] {
            jet.reset(0);
            comp(x, y, jet);
            let v = jet.value();
            if v > tol || v.is_nan() {
                return false;
            }
        }
        true
    }

    pub(crate) fn guard_ok(&self, x: &[f64], y: &[f64]) -> bool {
        self.guard.as_ref().is_none_or(|g| g(x, y).is_ok())
    }
}

impl Evaluator for ProblemDefinition {
    fn dims(&self) -> Dimensions {
        self.dims
    }

    fn evaluate(&self, point: &Point, sel: EvalSelector) -> Result<Tensor> {
        ProblemDefinition::evaluate(self, point, sel)
    }
}

/// Free-function form of [`ProblemDefinition::evaluate`].
pub fn evaluate(problem: &ProblemDefinition, point: &Point, sel: EvalSelector) -> Result<Tensor> {
    problem.evaluate(point, sel)
}

fn write_block(jet: &Jet, sel: EvalSelector, row: usize, stacked: bool, out: &mut Tensor) {
    use crate::jet::{X, Y};
    let (nx, ny) = (jet.nx(), jet.ny());
    match sel.deriv {
        Derivative::Value => out.set(row, 0, jet.value()),
        Derivative::Dx | Derivative::Dy => {
            let g = if sel.deriv == Derivative::Dx {
                jet.grad_x()
            } else {
                jet.grad_y()
            };
            for (k, &v) in g.iter().enumerate() {
                if stacked {
                    out.set(row, k, v);
                } else {
                    out.set(k, 0, v);
                }
            }
        }
        Derivative::Dxx | Derivative::Dxy | Derivative::Dyy => {
            let (r, c, rv, cv): (usize, usize, fn(usize) -> crate::jet::V, fn(usize) -> crate::jet::V) =
                match sel.deriv {
                    Derivative::Dxx => (nx, nx, X, X),
                    Derivative::Dxy => (ny, nx, Y, X),
                    _ => (ny, ny, Y, Y),
                };
            let base = if stacked { row * r } else { 0 };
            for a in 0..r {
                for b in 0..c {
                    out.set(base + a, b, jet.hess(rv(a), cv(b)));
                }
            }
        }
    }
}

/// Turns equality rows `h(x, y) = 0` into the inequality block `[+h; −h]`.
pub fn split_equalities(equalities: &[Component]) -> Vec<Component> {
    let mut rows: Vec<Component> = equalities.to_vec();
    rows.extend(equalities.iter().cloned().map(crate::jet::negated));
    rows
}

/// Appends the split form of `equalities` to the given inequality rows.
pub fn with_equalities(mut inequalities: Vec<Component>, equalities: &[Component]) -> Vec<Component> {
    inequalities.extend(split_equalities(equalities));
    inequalities
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::{lin, X, Y};

    #[test]
    fn shape_examples() {
        let d = Dimensions::new(1, 1, 0, 3);
        let gyy = EvalSelector::new(Function::LowerConstraints, Derivative::Dyy);
        assert_eq!(shape_of(d, gyy), (3, 1));
        let d = Dimensions::new(2, 2, 3, 0);
        let gxy = EvalSelector::new(Function::UpperConstraints, Derivative::Dxy);
        assert_eq!(shape_of(d, gxy), (6, 2));
        let d = Dimensions::new(2, 3, 0, 0);
        let fxy = EvalSelector::new(Function::UpperObjective, Derivative::Dxy);
        assert_eq!(shape_of(d, fxy), (3, 2));
        assert_eq!(shape_of(d, EvalSelector::new(Function::UpperConstraints, Derivative::Dxx)), (0, 0));
    }

    #[test]
    fn twenty_four_selectors() {
        assert_eq!(EvalSelector::all().count(), 24);
    }

    #[test]
    fn keys_round_trip() {
        for s in EvalSelector::all() {
            let f: Function = s.func.key().to_string().parse().unwrap();
            let d: Derivative = s.deriv.key().parse().unwrap();
            assert_eq!(EvalSelector::new(f, d), s);
        }
        assert!("q".parse::<Function>().is_err());
        assert!("xz".parse::<Derivative>().is_err());
    }

    #[test]
    fn split_equalities_appends_negated_block() {
        let h = vec![lin(&[(X(0), 1.0), (Y(0), -1.0)], 0.0)];
        let rows = split_equalities(&h);
        assert_eq!(rows.len(), 2);
        let mut j = Jet::new(1, 1, 1);
        let vals: Vec<f64> = rows
            .iter()
            .map(|r| {
                j.reset(1);
                r(&[2.0], &[1.0], &mut j);
                j.value()
            })
            .collect();
        assert_eq!(vals, vec![1.0, -1.0]);
        let vals: Vec<f64> = rows
            .iter()
            .map(|r| {
                j.reset(1);
                r(&[1.0], &[1.0], &mut j);
                j.value()
            })
            .collect();
        assert_eq!(vals, vec![0.0, 0.0]);
    }

    #[test]
    fn interval_intersection() {
        let a = Interval::new(-10.0, 10.0);
        let b = Interval::new(0.0, 50.0);
        assert_eq!(a.intersect(&b), Interval::new(0.0, 10.0));
    }
}
