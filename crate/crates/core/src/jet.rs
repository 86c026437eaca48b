//! Second-order jets of scalar component functions.
//!
//! Every scalar piece of a problem (an objective, or one row of a constraint
//! vector) is a [`Component`]: a closure that writes its value, gradient and
//! Hessian into a [`Jet`]. Derivatives are written out by hand for each
//! formula; the jet only stores them in the joint `(x, y)` layout.

use std::sync::Arc;

/// A variable reference: `X(i)` is `x_{i+1}`, `Y(i)` is `y_{i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum V {
    X(usize),
    Y(usize),
}

pub use V::{X, Y};

impl V {
    #[inline]
    pub fn get(self, x: &[f64], y: &[f64]) -> f64 {
        match self {
            X(i) => x[i],
            Y(i) => y[i],
        }
    }
}

/// Value, gradient and Hessian of a scalar function of `(x, y)`.
///
/// The gradient is stored over `z = (x, y)` and the Hessian as a dense
/// symmetric `(n_x + n_y)²` block. Setters accumulate, and are no-ops when
/// the requested order does not need them.
#[derive(Debug, Clone)]
pub struct Jet {
    nx: usize,
    ny: usize,
    order: u8,
    value: f64,
    grad: Vec<f64>,
    hess: Vec<f64>,
}

impl Jet {
    pub fn new(nx: usize, ny: usize, order: u8) -> Self {
        let n = nx + ny;
        Self {
            nx,
            ny,
            order,
            value: 0.0,
            grad: if order >= 1 { vec![0.0; n] } else { Vec::new() },
            hess: if order >= 2 { vec![0.0; n * n] } else { Vec::new() },
        }
    }

    /// Clears the jet for reuse, growing buffers if the order increased.
    pub fn reset(&mut self, order: u8) {
        let n = self.nx + self.ny;
        self.order = order;
        self.value = 0.0;
        if order >= 1 {
            self.grad.clear();
            self.grad.resize(n, 0.0);
        }
        if order >= 2 {
            self.hess.clear();
            self.hess.resize(n * n, 0.0);
        }
    }

    #[inline]
    pub fn first(&self) -> bool {
        self.order >= 1
    }

    #[inline]
    pub fn second(&self) -> bool {
        self.order >= 2
    }

    #[inline]
    pub fn set(&mut self, v: f64) {
        self.value = v;
    }

    #[inline]
    fn idx(&self, v: V) -> usize {
        match v {
            X(i) => i,
            Y(i) => self.nx + i,
        }
    }

    /// Adds `v` to the partial derivative with respect to `var`.
    #[inline]
    pub fn d(&mut self, var: V, v: f64) {
        if self.order >= 1 {
            let i = self.idx(var);
            self.grad[i] += v;
        }
    }

    /// Adds `v` to the mixed second partial with respect to `a` and `b`
    /// (both symmetric entries; once on the diagonal).
    #[inline]
    pub fn d2(&mut self, a: V, b: V, v: f64) {
        if self.order >= 2 {
            let n = self.nx + self.ny;
            let (i, k) = (self.idx(a), self.idx(b));
            self.hess[i * n + k] += v;
            if i != k {
                self.hess[k * n + i] += v;
            }
        }
    }

    #[inline]
    pub fn dx(&mut self, i: usize, v: f64) {
        self.d(X(i), v)
    }

    #[inline]
    pub fn dy(&mut self, i: usize, v: f64) {
        self.d(Y(i), v)
    }

    #[inline]
    pub fn dxx(&mut self, i: usize, k: usize, v: f64) {
        self.d2(X(i), X(k), v)
    }

    #[inline]
    pub fn dyy(&mut self, i: usize, k: usize, v: f64) {
        self.d2(Y(i), Y(k), v)
    }

    #[inline]
    pub fn dxy(&mut self, ix: usize, iy: usize, v: f64) {
        self.d2(X(ix), Y(iy), v)
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn grad_x(&self) -> &[f64] {
        &self.grad[..self.nx]
    }

    pub fn grad_y(&self) -> &[f64] {
        &self.grad[self.nx..]
    }

    /// Second partial `∂²/∂a∂b` from the stored Hessian.
    pub fn hess(&self, a: V, b: V) -> f64 {
        let n = self.nx + self.ny;
        self.hess[self.idx(a) * n + self.idx(b)]
    }

    pub(crate) fn negate(&mut self) {
        self.value = -self.value;
        self.grad.iter_mut().for_each(|g| *g = -*g);
        self.hess.iter_mut().for_each(|h| *h = -*h);
    }
}

/// One scalar function with hand-written first and second derivatives.
pub type Component = Arc<dyn Fn(&[f64], &[f64], &mut Jet) + Send + Sync>;

pub fn custom(f: impl Fn(&[f64], &[f64], &mut Jet) + Send + Sync + 'static) -> Component {
    Arc::new(f)
}

/// `Σ c_k v_k + c0`.
pub fn lin(terms: &[(V, f64)], c0: f64) -> Component {
    let terms = terms.to_vec();
    Arc::new(move |x, y, j| {
        let mut s = c0;
        for &(v, c) in &terms {
            s += c * v.get(x, y);
            j.d(v, c);
        }
        j.set(s);
    })
}

/// `-v` (non-negativity written as `-v ≤ 0`).
pub fn neg(v: V) -> Component {
    lin(&[(v, -1.0)], 0.0)
}

/// `v - ub` (upper bound written as `v - ub ≤ 0`).
pub fn le(v: V, ub: f64) -> Component {
    lin(&[(v, 1.0)], -ub)
}

/// `lb - v` (lower bound written as `lb - v ≤ 0`).
pub fn ge(v: V, lb: f64) -> Component {
    lin(&[(v, -1.0)], lb)
}

/// Dense affine map `a·x + b·y + c`.
pub fn affine(a: &[f64], b: &[f64], c: f64) -> Component {
    let terms: Vec<(V, f64)> = a
        .iter()
        .enumerate()
        .map(|(i, &c)| (X(i), c))
        .chain(b.iter().enumerate().map(|(i, &c)| (Y(i), c)))
        .filter(|&(_, c)| c != 0.0)
        .collect();
    lin(&terms, c)
}

/// Rows `-x_i` for every upper variable.
pub fn neg_x(nx: usize) -> Vec<Component> {
    (0..nx).map(|i| neg(X(i))).collect()
}

/// Rows `-y_i` for every lower variable.
pub fn neg_y(ny: usize) -> Vec<Component> {
    (0..ny).map(|i| neg(Y(i))).collect()
}

/// Rows `x_i - ub` for every upper variable.
pub fn x_le(nx: usize, ub: f64) -> Vec<Component> {
    (0..nx).map(|i| le(X(i), ub)).collect()
}

/// Rows `lb - x_i` for every upper variable.
pub fn x_ge(nx: usize, lb: f64) -> Vec<Component> {
    (0..nx).map(|i| ge(X(i), lb)).collect()
}

pub fn y_le(ny: usize, ub: f64) -> Vec<Component> {
    (0..ny).map(|i| le(Y(i), ub)).collect()
}

pub fn y_ge(ny: usize, lb: f64) -> Vec<Component> {
    (0..ny).map(|i| ge(Y(i), lb)).collect()
}

/// Quadratic built from weighted squares of affine terms, bilinear terms and
/// a linear part:
/// `Σ w (Σ c v + c0)² + Σ c v_a v_b + Σ c v + k`.
#[derive(Clone, Default)]
pub struct Quad {
    squares: Vec<(f64, Vec<(V, f64)>, f64)>,
    bilinear: Vec<(V, V, f64)>,
    linear: Vec<(V, f64)>,
    constant: f64,
}

impl Quad {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `w (Σ c v + c0)²`.
    pub fn sq(mut self, w: f64, terms: &[(V, f64)], c0: f64) -> Self {
        self.squares.push((w, terms.to_vec(), c0));
        self
    }

    /// Adds `c a b` (use `a == b` for `c a²`).
    pub fn bil(mut self, a: V, b: V, c: f64) -> Self {
        self.bilinear.push((a, b, c));
        self
    }

    pub fn lin(mut self, v: V, c: f64) -> Self {
        self.linear.push((v, c));
        self
    }

    pub fn cst(mut self, k: f64) -> Self {
        self.constant += k;
        self
    }

    pub fn build(self) -> Component {
        Arc::new(move |x, y, j| {
            let mut s = self.constant;
            for (w, terms, c0) in &self.squares {
                let r = terms.iter().fold(*c0, |acc, &(v, c)| acc + c * v.get(x, y));
                s += w * r * r;
                for &(a, ca) in terms {
                    j.d(a, 2.0 * w * r * ca);
                }
                if j.second() {
                    for (ia, &(a, ca)) in terms.iter().enumerate() {
                        for &(b, cb) in &terms[ia..] {
                            j.d2(a, b, 2.0 * w * ca * cb);
                        }
                    }
                }
            }
            for &(a, b, c) in &self.bilinear {
                let (va, vb) = (a.get(x, y), b.get(x, y));
                s += c * va * vb;
                if a == b {
                    j.d(a, 2.0 * c * va);
                    j.d2(a, a, 2.0 * c);
                } else {
                    j.d(a, c * vb);
                    j.d(b, c * va);
                    j.d2(a, b, c);
                }
            }
            for &(v, c) in &self.linear {
                s += c * v.get(x, y);
                j.d(v, c);
            }
            j.set(s);
        })
    }
}

/// `½ zᵀ H z + cᵀ z + k` over the joint vector `z = (x, y)`; `h` is row-major and symmetric.
pub fn quadratic_form(nx: usize, ny: usize, h: Vec<f64>, c: Vec<f64>, k: f64) -> Component {
    let n = nx + ny;
    assert_eq!(h.len(), n * n);
    assert_eq!(c.len(), n);
    let var = move |i: usize| if i < nx { X(i) } else { Y(i - nx) };
    Arc::new(move |x, y, j| {
        let z = |i: usize| if i < nx { x[i] } else { y[i - nx] };
        let mut s = k;
        for i in 0..n {
            let zi = z(i);
            let mut hz = 0.0;
            for l in 0..n {
                hz += h[i * n + l] * z(l);
            }
            s += 0.5 * zi * hz + c[i] * zi;
            j.d(var(i), hz + c[i]);
            if j.second() {
                for l in i..n {
                    j.d2(var(i), var(l), h[i * n + l]);
                }
            }
        }
        j.set(s);
    })
}

/// Wraps a component so that it reports `-f`.
pub fn negated(c: Component) -> Component {
    Arc::new(move |x, y, j| {
        c(x, y, j);
        j.negate();
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(c: &Component, x: &[f64], y: &[f64]) -> Jet {
        let mut j = Jet::new(x.len(), y.len(), 2);
        c(x, y, &mut j);
        j
    }

    #[test]
    fn quad_matches_expanded_polynomial() {
        // (x-5)² + (2y+1)²
        let q = Quad::new()
            .sq(1.0, &[(X(0), 1.0)], -5.0)
            .sq(1.0, &[(Y(0), 2.0)], 1.0)
            .build();
        let j = eval(&q, &[4.0], &[0.0]);
        assert_eq!(j.value(), 2.0);
        assert_eq!(j.grad_x(), &[-2.0]);
        assert_eq!(j.grad_y(), &[4.0]);
        assert_eq!(j.hess(X(0), X(0)), 2.0);
        assert_eq!(j.hess(Y(0), Y(0)), 8.0);
        assert_eq!(j.hess(X(0), Y(0)), 0.0);
    }

    #[test]
    fn bilinear_terms_fill_both_triangles() {
        let q = Quad::new().bil(X(0), Y(1), 3.0).bil(Y(0), Y(0), 0.5).build();
        let j = eval(&q, &[2.0], &[4.0, 5.0]);
        assert_eq!(j.value(), 3.0 * 2.0 * 5.0 + 0.5 * 16.0);
        assert_eq!(j.hess(X(0), Y(1)), 3.0);
        assert_eq!(j.hess(Y(1), X(0)), 3.0);
        assert_eq!(j.hess(Y(0), Y(0)), 1.0);
    }

    #[test]
    fn quadratic_form_gradient_is_hz_plus_c() {
        let h = vec![2.0, 1.0, 1.0, 4.0];
        let f = quadratic_form(1, 1, h, vec![1.0, -1.0], 3.0);
        let j = eval(&f, &[1.0], &[2.0]);
        assert_eq!(j.value(), 0.5 * (2.0 + 2.0 * 2.0 + 16.0) + 1.0 - 2.0 + 3.0);
        assert_eq!(j.grad_x(), &[2.0 + 2.0 + 1.0]);
        assert_eq!(j.grad_y(), &[1.0 + 8.0 - 1.0]);
    }

    #[test]
    fn order_zero_skips_derivative_storage() {
        let c = lin(&[(X(0), 2.0)], 1.0);
        let mut j = Jet::new(1, 1, 0);
        c(&[3.0], &[0.0], &mut j);
        assert_eq!(j.value(), 7.0);
        assert!(!j.first());
    }

    #[test]
    fn negated_flips_every_order() {
        let c = negated(Quad::new().bil(X(0), Y(0), 1.0).build());
        let j = eval(&c, &[2.0], &[3.0]);
        assert_eq!(j.value(), -6.0);
        assert_eq!(j.grad_x(), &[-3.0]);
        assert_eq!(j.hess(X(0), Y(0)), -1.0);
    }
}
