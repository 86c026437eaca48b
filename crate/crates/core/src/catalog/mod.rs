//! The problem suite, one builder function per problem.

use std::sync::Arc;

use crate::jet::{Component, Jet};
use crate::model::{Dimensions, Interval, Params, Point, ProblemDefinition, Smoothness};
use crate::registry::{KnownSolution, Labels, ParamSpec, SolutionStatus};

mod a_b;
mod c;
mod d_f;
mod g_l;
mod m;
mod n_o;
mod p_z;

/// Default search and sampling half-width for variables without explicit bounds.
pub(crate) const DEFAULT_BOX: f64 = 10.0;

#[derive(Clone, Copy)]
pub(crate) struct Entry {
    pub build: fn(&Params) -> Built,
}

pub(crate) struct Meta {
    pub source: &'static str,
    pub solutions: Vec<KnownSolution>,
    pub claimed: (Option<f64>, Option<f64>),
    pub notes: Vec<String>,
    pub n_eq: (usize, usize),
    pub kkt_checkable: bool,
    pub no_optimal_solution: bool,
    pub label_override: Option<Labels>,
}

pub(crate) struct Built {
    pub definition: ProblemDefinition,
    pub meta: Meta,
    pub param_specs: Vec<ParamSpec>,
}

pub(crate) fn entries() -> Vec<Entry> {
    let fns: Vec<fn(&Params) -> Built> = [a_b::ALL, c::ALL, d_f::ALL, g_l::ALL, m::ALL, n_o::ALL, p_z::ALL].concat();
    fns.into_iter().map(|build| Entry { build }).collect()
}

pub(crate) use Status::*;

/// Solution status shorthands used by the catalog files.
#[derive(Clone, Copy)]
pub(crate) enum Status {
    Global,
    Local,
    Best,
    Approx,
    Cited,
}

impl From<Status> for SolutionStatus {
    fn from(s: Status) -> Self {
        match s {
            Global => SolutionStatus::Global,
            Local => SolutionStatus::Local,
            Best => SolutionStatus::BestKnown,
            Approx => SolutionStatus::Approximate,
            Cited => SolutionStatus::None,
        }
    }
}

/// Problem builder.
pub(crate) struct P {
    name: &'static str,
    source: &'static str,
    nx: usize,
    ny: usize,
    overrides: Params,
    params: Params,
    specs: Vec<ParamSpec>,
    funcs: [Vec<Component>; 4],
    domain: Vec<Interval>,
    bounds: Vec<Interval>,
    smooth: Smoothness,
    guard: Option<crate::model::DomainGuard>,
    kink: Option<crate::model::KinkDistance>,
    kink_tol: f64,
    solutions: Vec<KnownSolution>,
    claimed: (Option<f64>, Option<f64>),
    notes: Vec<String>,
    n_eq: (usize, usize),
    kkt: bool,
    no_opt: bool,
    labels: Option<Labels>,
}

impl P {
    pub fn new(name: &'static str, source: &'static str, nx: usize, ny: usize) -> Self {
        let unit = Interval::new(-DEFAULT_BOX, DEFAULT_BOX);
        Self {
            name,
            source,
            nx,
            ny,
            overrides: Params::new(),
            params: Params::new(),
            specs: Vec::new(),
            funcs: Default::default(),
            domain: vec![unit; nx + ny],
            bounds: vec![unit; nx + ny],
            smooth: Smoothness::default(),
            guard: None,
            kink: None,
            kink_tol: 1e-8,
            solutions: Vec::new(),
            claimed: (None, None),
            notes: Vec::new(),
            n_eq: (0, 0),
            kkt: true,
            no_opt: false,
            labels: None,
        }
    }

    /// Supplies the caller's parameter overrides; call before [`P::param`].
    pub fn with(mut self, overrides: &Params) -> Self {
        self.overrides = overrides.clone();
        self
    }

    /// Declares a parameter and returns its bound value.
    pub fn param(&mut self, name: &'static str, default: f64, min: Option<(f64, bool)>, requirement: &'static str) -> f64 {
        let v = self.overrides.get(name).copied().unwrap_or(default);
        self.specs.push(ParamSpec {
            name,
            default,
            min,
            requirement,
        });
        self.params.insert(name.to_string(), v);
        v
    }

    #[allow(non_snake_case)]
    pub fn F(mut self, c: Component) -> Self {
        self.funcs[0] = vec![c];
        self
    }

    #[allow(non_snake_case)]
    pub fn G(mut self, rows: Vec<Component>) -> Self {
        self.funcs[1] = rows;
        self
    }

    pub fn f(mut self, c: Component) -> Self {
        self.funcs[2] = vec![c];
        self
    }

    pub fn g(mut self, rows: Vec<Component>) -> Self {
        self.funcs[3] = rows;
        self
    }

    /// Search box for all of `x`.
    pub fn xb(mut self, lo: f64, hi: f64) -> Self {
        for i in 0..self.nx {
            self.bounds[i] = Interval::new(lo, hi);
        }
        self
    }

    pub fn yb(mut self, lo: f64, hi: f64) -> Self {
        for i in 0..self.ny {
            self.bounds[self.nx + i] = Interval::new(lo, hi);
        }
        self
    }

    pub fn xbi(mut self, i: usize, lo: f64, hi: f64) -> Self {
        self.bounds[i] = Interval::new(lo, hi);
        self
    }

    pub fn ybi(mut self, i: usize, lo: f64, hi: f64) -> Self {
        self.bounds[self.nx + i] = Interval::new(lo, hi);
        self
    }

    /// Natural-domain box of `x_i` (where formulas are finite).
    pub fn dom_x(mut self, i: usize, lo: f64, hi: f64) -> Self {
        self.domain[i] = Interval::new(lo, hi);
        self.smooth.domain_restricted = true;
        self
    }

    pub fn dom_y(mut self, i: usize, lo: f64, hi: f64) -> Self {
        self.domain[self.nx + i] = Interval::new(lo, hi);
        self.smooth.domain_restricted = true;
        self
    }

    /// Natural-domain test raising `DomainViolation` on evaluation.
    pub fn guard(mut self, g: impl Fn(&[f64], &[f64]) -> Result<(), String> + Send + Sync + 'static) -> Self {
        self.guard = Some(Arc::new(g));
        self.smooth.domain_restricted = true;
        self
    }

    /// Distance to the nearest nondifferentiability; marks the problem nonsmooth.
    pub fn kink(mut self, tol: f64, k: impl Fn(&[f64], &[f64]) -> f64 + Send + Sync + 'static) -> Self {
        self.kink = Some(Arc::new(k));
        self.kink_tol = tol;
        self.smooth.nonsmooth_objective = true;
        self
    }

    pub fn piecewise(mut self) -> Self {
        self.smooth.piecewise = true;
        self
    }

    pub fn sol(self, status: Status, x: &[f64], y: &[f64]) -> Self {
        self.push_sol(status, Some(Point::new(x, y)), None, None, None)
    }

    /// Solution with claimed upper and lower values.
    pub fn sol_v(self, status: Status, x: &[f64], y: &[f64], fu: Option<f64>, fl: Option<f64>) -> Self {
        self.push_sol(status, Some(Point::new(x, y)), None, fu, fl)
    }

    /// Segment of solutions from `(xa, ya)` to `(xb, yb)`.
    pub fn family(self, status: Status, a: (&[f64], &[f64]), b: (&[f64], &[f64])) -> Self {
        self.push_sol(status, Some(Point::new(a.0, a.1)), Some(Point::new(b.0, b.1)), None, None)
    }

    /// Claimed optimal values without a point.
    pub fn values(mut self, fu: Option<f64>, fl: Option<f64>) -> Self {
        self.solutions.push(KnownSolution {
            status: SolutionStatus::ValueOnly,
            point: None,
            point_end: None,
            claimed_upper: fu,
            claimed_lower: fl,
            value_tol: None,
            note: String::new(),
        });
        if self.claimed == (None, None) {
            self.claimed = (fu, fl);
        }
        self
    }

    fn push_sol(mut self, status: Status, p: Option<Point>, end: Option<Point>, fu: Option<f64>, fl: Option<f64>) -> Self {
        let status: SolutionStatus = status.into();
        if status.is_claimed_optimal() && self.claimed == (None, None) {
            self.claimed = (fu, fl);
        }
        self.solutions.push(KnownSolution {
            status,
            point: p,
            point_end: end,
            claimed_upper: fu,
            claimed_lower: fl,
            value_tol: None,
            note: String::new(),
        });
        self
    }

    /// Annotates the most recently added solution.
    pub fn sol_note(mut self, note: &str) -> Self {
        if let Some(s) = self.solutions.last_mut() {
            s.note = note.to_string();
        }
        self
    }

    /// Loosened relative tolerance for the most recent solution's claimed values.
    pub fn sol_tol(mut self, tol: f64) -> Self {
        if let Some(s) = self.solutions.last_mut() {
            s.value_tol = Some(tol);
        }
        self
    }

    pub fn note(mut self, n: &str) -> Self {
        self.notes.push(n.to_string());
        self
    }

    pub fn no_kkt(mut self, reason: &str) -> Self {
        self.kkt = false;
        self.notes.push(format!("lower-level KKT check disabled: {reason}"));
        self
    }

    pub fn equalities(mut self, n_upper: usize, n_lower: usize) -> Self {
        self.n_eq = (n_upper, n_lower);
        self
    }

    pub fn no_optimal_solution(mut self) -> Self {
        self.no_opt = true;
        self
    }

    pub fn labels(mut self, l: &str) -> Self {
        self.labels = Some(l.parse().expect("label literal"));
        self
    }

    pub fn build(self) -> Built {
        let dims = Dimensions::new(self.nx, self.ny, self.funcs[1].len(), self.funcs[3].len());
        assert_eq!(self.funcs[0].len(), 1, "{}: missing F", self.name);
        assert_eq!(self.funcs[2].len(), 1, "{}: missing f", self.name);
        Built {
            definition: ProblemDefinition {
                name: self.name.to_string(),
                dims,
                params: self.params,
                domain_box: self.domain,
                bounds: self.bounds,
                smoothness: self.smooth,
                funcs: self.funcs,
                guard: self.guard,
                kink: self.kink,
                kink_tol: self.kink_tol,
            },
            meta: Meta {
                source: self.source,
                solutions: self.solutions,
                claimed: self.claimed,
                notes: self.notes,
                n_eq: self.n_eq,
                kkt_checkable: self.kkt,
                no_optimal_solution: self.no_opt,
                label_override: self.labels,
            },
            param_specs: self.specs,
        }
    }
}

/// One factor `(Σ c v + c0)^p` of a [`prod`]; variables within a factor must be distinct.
#[derive(Clone)]
pub(crate) struct Factor {
    terms: Vec<(crate::jet::V, f64)>,
    c0: f64,
    p: f64,
}

pub(crate) fn fac(terms: &[(crate::jet::V, f64)], c0: f64, p: f64) -> Factor {
    Factor {
        terms: terms.to_vec(),
        c0,
        p,
    }
}

/// `c · Π (Σ c v + c0)^p` over the given affine factors.
pub(crate) fn prod(c: f64, factors: Vec<Factor>) -> Component {
    Arc::new(move |x, y, j: &mut Jet| prod_into(c, &factors, x, y, j))
}

/// `c · Π v_k^{p_k}` with integer powers.
pub(crate) fn mono(c: f64, factors: &[(crate::jet::V, i32)]) -> Component {
    let f = factors.iter().map(|&(v, p)| fac(&[(v, 1.0)], 0.0, p as f64)).collect();
    prod(c, f)
}

/// `c · Π v_k^{p_k}` with real powers; bases must stay positive.
pub(crate) fn monof(c: f64, factors: &[(crate::jet::V, f64)]) -> Component {
    let f = factors.iter().map(|&(v, p)| fac(&[(v, 1.0)], 0.0, p)).collect();
    prod(c, f)
}

fn powr(r: f64, p: f64) -> f64 {
    if p == 0.0 {
        1.0
    } else if p.fract() == 0.0 && p.abs() < 64.0 {
        r.powi(p as i32)
    } else {
        r.powf(p)
    }
}

fn prod_into(c: f64, factors: &[Factor], x: &[f64], y: &[f64], j: &mut Jet) {
    let r: Vec<f64> = factors
        .iter()
        .map(|f| f.terms.iter().fold(f.c0, |acc, &(v, a)| acc + a * v.get(x, y)))
        .collect();
    let base: Vec<f64> = factors.iter().zip(&r).map(|(f, &r)| powr(r, f.p)).collect();
    let rest = |skip: &[usize]| -> f64 {
        base.iter()
            .enumerate()
            .filter(|(k, _)| !skip.contains(k))
            .map(|(_, b)| b)
            .product()
    };
    j.set(j.value() + c * rest(&[]));
    if !j.first() {
        return;
    }
    let d1: Vec<f64> = factors.iter().zip(&r).map(|(f, &r)| f.p * powr(r, f.p - 1.0)).collect();
    for (k, fk) in factors.iter().enumerate() {
        let w = c * d1[k] * rest(&[k]);
        for &(v, a) in &fk.terms {
            j.d(v, w * a);
        }
        if !j.second() {
            continue;
        }
        let w2 = c * fk.p * (fk.p - 1.0) * powr(r[k], fk.p - 2.0) * rest(&[k]);
        for (iu, &(u, au)) in fk.terms.iter().enumerate() {
            for &(v, av) in &fk.terms[iu..] {
                j.d2(u, v, w2 * au * av);
            }
        }
        for (l, fl) in factors.iter().enumerate().skip(k + 1) {
            let w = c * d1[k] * d1[l] * rest(&[k, l]);
            for &(u, au) in &fk.terms {
                for &(v, av) in &fl.terms {
                    let twice = if u == v { 2.0 } else { 1.0 };
                    j.d2(u, v, twice * w * au * av);
                }
            }
        }
    }
}

/// Sum of monomials plus a constant.
pub(crate) fn poly(terms: &[(f64, &[(crate::jet::V, i32)])], c0: f64) -> Component {
    let terms: Vec<(f64, Vec<Factor>)> = terms
        .iter()
        .map(|(c, f)| (*c, f.iter().map(|&(v, p)| fac(&[(v, 1.0)], 0.0, p as f64)).collect()))
        .collect();
    Arc::new(move |x, y, j: &mut Jet| {
        j.set(c0);
        for (c, f) in &terms {
            prod_into(*c, f, x, y, j);
        }
    })
}

/// Sum of components.
pub(crate) fn sum(parts: Vec<Component>) -> Component {
    Arc::new(move |x, y, j: &mut Jet| {
        let mut total = 0.0;
        for p in &parts {
            p(x, y, j);
            total += j.value();
            j.set(0.0);
        }
        j.set(total);
    })
}

/// `w (Σ c v + c0)^p`; for non-integer `p` the base must stay positive.
/// Variables in `terms` must be distinct (as in [`crate::jet::Quad`]).
pub(crate) fn pow_lin(w: f64, terms: &[(crate::jet::V, f64)], c0: f64, p: f64) -> Component {
    let terms = terms.to_vec();
    let int = p.fract() == 0.0;
    Arc::new(move |x, y, j: &mut Jet| {
        let r = terms.iter().fold(c0, |acc, &(v, c)| acc + c * v.get(x, y));
        let pw = |e: f64| -> f64 {
            if e == 0.0 {
                1.0
            } else if int {
                r.powi(e as i32)
            } else {
                r.powf(e)
            }
        };
        j.set(w * pw(p));
        let d1 = w * p * pw(p - 1.0);
        for &(a, ca) in &terms {
            j.d(a, d1 * ca);
        }
        if j.second() {
            let d2 = w * p * (p - 1.0) * pw(p - 2.0);
            for (ia, &(a, ca)) in terms.iter().enumerate() {
                for &(b, cb) in &terms[ia..] {
                    j.d2(a, b, d2 * ca * cb);
                }
            }
        }
    })
}

/// `w exp(Σ c v + c0)`.
pub(crate) fn exp_lin(w: f64, terms: &[(crate::jet::V, f64)], c0: f64) -> Component {
    let terms = terms.to_vec();
    Arc::new(move |x, y, j: &mut Jet| {
        let r = terms.iter().fold(c0, |acc, &(v, c)| acc + c * v.get(x, y));
        let e = w * r.exp();
        j.set(e);
        for (ia, &(a, ca)) in terms.iter().enumerate() {
            j.d(a, e * ca);
            for &(b, cb) in &terms[ia..] {
                j.d2(a, b, e * ca * cb);
            }
        }
    })
}

/// Evaluates `c` into a fresh jet of the same order as `j`.
fn inner(c: &Component, x: &[f64], y: &[f64], j: &Jet) -> (Jet, Vec<crate::jet::V>, Vec<f64>) {
    let order = if j.second() { 2 } else { u8::from(j.first()) };
    let (nx, ny) = (j.nx(), j.ny());
    let mut ji = Jet::new(nx, ny, order);
    c(x, y, &mut ji);
    if order == 0 {
        return (ji, Vec::new(), Vec::new());
    }
    let vars = (0..nx).map(crate::jet::X).chain((0..ny).map(crate::jet::Y)).collect();
    let g = ji.grad_x().iter().chain(ji.grad_y()).copied().collect();
    (ji, vars, g)
}

/// Product of two components by the product rule.
pub(crate) fn mul(a: Component, b: Component) -> Component {
    Arc::new(move |x, y, j: &mut Jet| {
        let (ja, vars, ga) = inner(&a, x, y, j);
        let (jb, _, gb) = inner(&b, x, y, j);
        let (va, vb) = (ja.value(), jb.value());
        j.set(va * vb);
        if !j.first() {
            return;
        }
        for (k, &vk) in vars.iter().enumerate() {
            j.d(vk, va * gb[k] + vb * ga[k]);
            if !j.second() {
                continue;
            }
            for (l, &vl) in vars.iter().enumerate().skip(k) {
                let h = va * jb.hess(vk, vl) + vb * ja.hess(vk, vl) + ga[k] * gb[l] + gb[k] * ga[l];
                if h != 0.0 {
                    j.d2(vk, vl, h);
                }
            }
        }
    })
}

/// Quotient `a / b` by the quotient rule; callers keep `b` away from zero.
pub(crate) fn div(a: Component, b: Component) -> Component {
    Arc::new(move |x, y, j: &mut Jet| {
        let (ja, vars, ga) = inner(&a, x, y, j);
        let (jb, _, gb) = inner(&b, x, y, j);
        let (va, vb) = (ja.value(), jb.value());
        let q = va / vb;
        j.set(q);
        if !j.first() {
            return;
        }
        let gq: Vec<f64> = ga.iter().zip(&gb).map(|(a, b)| (a - q * b) / vb).collect();
        for (k, &vk) in vars.iter().enumerate() {
            j.d(vk, gq[k]);
            if !j.second() {
                continue;
            }
            for (l, &vl) in vars.iter().enumerate().skip(k) {
                let h = (ja.hess(vk, vl) - q * jb.hess(vk, vl) - gq[k] * gb[l] - gb[k] * gq[l]) / vb;
                if h != 0.0 {
                    j.d2(vk, vl, h);
                }
            }
        }
    })
}

/// `exp(h)` for a component `h`.
pub(crate) fn exp_of(h: Component) -> Component {
    Arc::new(move |x, y, j: &mut Jet| {
        let (jh, vars, g) = inner(&h, x, y, j);
        let e = jh.value().exp();
        j.set(e);
        if !j.first() {
            return;
        }
        for (k, &vk) in vars.iter().enumerate() {
            j.d(vk, e * g[k]);
            if !j.second() {
                continue;
            }
            for (l, &vl) in vars.iter().enumerate().skip(k) {
                let v = e * (jh.hess(vk, vl) + g[k] * g[l]);
                if v != 0.0 {
                    j.d2(vk, vl, v);
                }
            }
        }
    })
}

/// `w exp(-(r/s)^p)` for an affine `r`; with a fractional `p` the base is
/// clamped at zero and the left side is flat.
pub(crate) fn decay(w: f64, terms: &[(crate::jet::V, f64)], c0: f64, s: f64, p: f64) -> Component {
    let terms = terms.to_vec();
    let clamp = p.fract() != 0.0;
    Arc::new(move |x, y, j: &mut Jet| {
        let r = terms.iter().fold(c0, |acc, &(v, c)| acc + c * v.get(x, y));
        let u = r / s;
        let (t, t1, t2) = if clamp && u <= 0.0 {
            (0.0, 0.0, 0.0)
        } else {
            (powr(u, p), p * powr(u, p - 1.0) / s, p * (p - 1.0) * powr(u, p - 2.0) / (s * s))
        };
        let e = w * (-t).exp();
        j.set(e);
        let d1 = -e * t1;
        let d2 = e * (t1 * t1 - t2);
        for (ia, &(a, ca)) in terms.iter().enumerate() {
            j.d(a, d1 * ca);
            for &(b, cb) in &terms[ia..] {
                j.d2(a, b, d2 * ca * cb);
            }
        }
    })
}

/// `(Σ n v + n0) / (Σ d v + d0)`; callers keep the denominator away from zero.
pub(crate) fn ratio_lin(num: &[(crate::jet::V, f64)], n0: f64, den: &[(crate::jet::V, f64)], d0: f64) -> Component {
    let mut uniq = Vec::new();
    for v in num.iter().chain(den).map(|&(v, _)| v) {
        if !uniq.contains(&v) {
            uniq.push(v);
        }
    }
    let coef = |t: &[(crate::jet::V, f64)], v| t.iter().filter(|(u, _)| *u == v).map(|(_, c)| c).sum::<f64>();
    let table: Vec<(crate::jet::V, f64, f64)> = uniq.iter().map(|&v| (v, coef(num, v), coef(den, v))).collect();
    Arc::new(move |x, y, j: &mut Jet| {
        let n = table.iter().fold(n0, |acc, &(v, c, _)| acc + c * v.get(x, y));
        let d = table.iter().fold(d0, |acc, &(v, _, c)| acc + c * v.get(x, y));
        j.set(n / d);
        let (d2, d3) = (d * d, d * d * d);
        for (ia, &(a, na, da)) in table.iter().enumerate() {
            j.d(a, na / d - n * da / d2);
            for &(b, nb, db) in &table[ia..] {
                j.d2(a, b, -(na * db + nb * da) / d2 + 2.0 * n * da * db / d3);
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::{X, Y};

    fn jet(c: &Component, x: &[f64], y: &[f64]) -> Jet {
        let mut j = Jet::new(x.len(), y.len(), 2);
        c(x, y, &mut j);
        j
    }

    #[test]
    fn monomial_derivatives() {
        // 3 x² y³ at (2, 1)
        let c = mono(3.0, &[(X(0), 2), (Y(0), 3)]);
        let j = jet(&c, &[2.0], &[1.0]);
        assert_eq!(j.value(), 12.0);
        assert_eq!(j.grad_x(), &[12.0]);
        assert_eq!(j.grad_y(), &[36.0]);
        assert_eq!(j.hess(X(0), X(0)), 6.0);
        assert_eq!(j.hess(X(0), Y(0)), 36.0);
        assert_eq!(j.hess(Y(0), Y(0)), 72.0);
    }

    #[test]
    fn repeated_variable_in_monomial() {
        // x·x·y written with two factors of x
        let c = mono(1.0, &[(X(0), 1), (X(0), 1), (Y(0), 1)]);
        let j = jet(&c, &[3.0], &[2.0]);
        assert_eq!(j.value(), 18.0);
        assert_eq!(j.grad_x(), &[12.0]);
        assert_eq!(j.hess(X(0), X(0)), 4.0);
        assert_eq!(j.hess(X(0), Y(0)), 6.0);
    }

    #[test]
    fn poly_and_sum_accumulate() {
        let p = poly(&[(1.0, &[(X(0), 2)]), (-2.0, &[(Y(0), 1)])], 5.0);
        let s = sum(vec![p.clone(), p]);
        let j = jet(&s, &[1.0], &[1.0]);
        assert_eq!(j.value(), 8.0);
        assert_eq!(j.grad_x(), &[4.0]);
        assert_eq!(j.grad_y(), &[-4.0]);
    }
}
