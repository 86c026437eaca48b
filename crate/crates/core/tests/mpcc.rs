use std::cell::RefCell;
use std::collections::BTreeSet;

use bilevel_core::mpcc::{build_mpcc, mpcc_residual, MpccModel, MpccPoint};
use bilevel_core::validation::{feasibility, kkt_fit};
use bilevel_core::{lookup, records, Dimensions, Error, EvalSelector, Evaluator, Point, Result, Tensor};
use proptest::prelude::*;

struct Recording<'a, E: Evaluator> {
    inner: &'a E,
    seen: RefCell<BTreeSet<String>>,
}

impl<E: Evaluator> Evaluator for Recording<'_, E> {
    fn dims(&self) -> Dimensions {
        self.inner.dims()
    }

    fn evaluate(&self, point: &Point, sel: EvalSelector) -> Result<Tensor> {
        self.seen.borrow_mut().insert(sel.to_string());
        self.inner.evaluate(point, sel)
    }
}

#[test]
fn residual_uses_four_selectors() {
    let (p, _) = lookup("MuuQuy2003Ex1").unwrap();
    let rec = Recording {
        inner: &p,
        seen: RefCell::new(BTreeSet::new()),
    };
    let m = MpccModel::over(&rec);
    assert_eq!(m.n_multipliers(), 3);
    assert_eq!(m.n_variables(), 6);
    let s = MpccPoint::new(Point::new([0.5], [0.2, 0.3]), vec![0.1, 0.0, 0.2]);
    mpcc_residual(&m, &s).unwrap();
    let seen: Vec<String> = rec.seen.into_inner().into_iter().collect();
    assert_eq!(seen, vec!["G", "fy", "g", "gy"]);
}

#[test]
fn nonsmooth_problem_is_rejected() {
    let (p, _) = lookup("MorganPatrone2006b").unwrap();
    assert!(matches!(build_mpcc(&p), Err(Error::NotSmooth(_))));
}

#[test]
fn interior_stationary_point() {
    let (p, _) = lookup("MitsosBarton2006Ex312").unwrap();
    let m = build_mpcc(&p).unwrap();
    let s = MpccPoint::new(Point::new([0.0], [0.0]), vec![0.0; m.n_multipliers()]);
    assert_eq!(mpcc_residual(&m, &s).unwrap(), 0.0);
}

#[test]
fn active_constraint_balances_gradient() {
    let (p, _) = lookup("LamparielloSagratella2017Ex31").unwrap();
    let m = build_mpcc(&p).unwrap();
    let s = MpccPoint::new(Point::new([1.0], [0.0]), vec![1.0]);
    assert_eq!(mpcc_residual(&m, &s).unwrap(), 0.0);
    let off = MpccPoint::new(Point::new([1.0], [0.0]), vec![0.5]);
    assert!((mpcc_residual(&m, &off).unwrap() - 0.5).abs() < 1e-15);
}

#[test]
fn unconstrained_lower_level() {
    let (p, _) = lookup("MacalHurter1997").unwrap();
    let m = build_mpcc(&p).unwrap();
    assert_eq!(m.n_multipliers(), 0);
    let pt = Point::new([10.0], [1.0]);
    let s = MpccPoint::new(pt.clone(), vec![]);
    let fy = p.evaluate(&pt, EvalSelector::new(bilevel_core::Function::LowerObjective, bilevel_core::Derivative::Dy)).unwrap();
    assert_eq!(m.stationarity_map(&s).unwrap(), fy.as_slice().to_vec());
}

#[test]
fn jacobian_matches_differences() {
    for name in ["MuuQuy2003Ex1", "MitsosBarton2006Ex321", "Colson2002BIPA3", "AiyoshiShimizu1984Ex2"] {
        let (p, _) = lookup(name).unwrap();
        let m = build_mpcc(&p).unwrap();
        let d = m.dims();
        let x: Vec<f64> = p.x_bounds().iter().map(|b| b.lo + 0.37 * b.width()).collect();
        let y: Vec<f64> = p.y_bounds().iter().map(|b| b.lo + 0.61 * b.width()).collect();
        let lam: Vec<f64> = (0..d.n_lower).map(|i| 0.3 + 0.1 * i as f64).collect();
        let s = MpccPoint { x, y, lambda: lam };
        let jac = m.stationarity_jacobian(&s).unwrap();
        assert_eq!(jac.shape(), (d.n_y, m.n_variables()));
        for j in 0..m.n_variables() {
            let bump = |h: f64| {
                let mut t = s.clone();
                let v = if j < d.n_x {
                    &mut t.x[j]
                } else if j < d.n_x + d.n_y {
                    &mut t.y[j - d.n_x]
                } else {
                    &mut t.lambda[j - d.n_x - d.n_y]
                };
                *v += h;
                m.stationarity_map(&t).unwrap()
            };
            let h = 1e-6;
            let (a, b) = (bump(h), bump(-h));
            for k in 0..d.n_y {
                let fd = (a[k] - b[k]) / (2.0 * h);
                let an = jac.get(k, j);
                assert!((fd - an).abs() <= 1e-5 * an.abs().max(1.0), "{name} [{k},{j}]: {fd} vs {an}");
            }
        }
    }
}

#[test]
fn fitted_multipliers_reproduce_kkt_residual() {
    for r in records().filter(|r| r.flags.lower_level_kkt_checkable) {
        let (p, _) = lookup(&r.name).unwrap();
        let Ok(m) = build_mpcc(&p) else { continue };
        for sol in &r.known_solutions {
            for pt in sol.sample_points() {
                if feasibility(&p, &pt).map_or(true, |(u, l)| u > 0.0 || l > 0.0) || p.near_kink(&pt, 0.0) {
                    continue;
                }
                let fit = kkt_fit(&p, &pt, 1e-6).unwrap();
                let res = mpcc_residual(&m, &MpccPoint::new(pt.clone(), fit.multipliers)).unwrap();
                assert!((res - fit.residual).abs() <= 1e-10, "{}: {res} vs {}", r.name, fit.residual);
            }
        }
    }
}

proptest! {
    #[test]
    fn residual_dominates_feasibility(t in prop::collection::vec(0.0f64..1.0, 4), l in prop::collection::vec(-1.0f64..1.0, 3)) {
        for name in ["MuuQuy2003Ex1", "AiyoshiShimizu1984Ex2", "ShimizuAiyoshi1981Ex2"] {
            let (p, _) = lookup(name).unwrap();
            let m = build_mpcc(&p).unwrap();
            let d = m.dims();
            let b = p.bounds();
            let z: Vec<f64> = (0..d.n()).map(|i| b[i].lo + t[i % t.len()] * b[i].width()).collect();
            let pt = Point::from_stacked(d, &z).unwrap();
            let lam: Vec<f64> = (0..d.n_lower).map(|i| l[i % l.len()]).collect();
            let neg: f64 = lam.iter().map(|v| (-v).max(0.0)).sum();
            let res = mpcc_residual(&m, &MpccPoint::new(pt.clone(), lam)).unwrap();
            let (u, lo) = feasibility(&p, &pt).unwrap();
            prop_assert!(res >= u.max(lo));
            prop_assert!(res >= neg);
        }
    }
}
