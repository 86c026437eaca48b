use bilevel_core::derivcheck::problem_rng;
use bilevel_core::oracle::{lower_level_oracle, OracleConfig};
use bilevel_core::registry::instantiate_with_record;
use bilevel_core::validation::{feasibility, kkt_fit, kkt_residual, validate, FindingKind, Tolerances, Verdict};
use bilevel_core::{lookup, nnls, Derivative, EvalSelector, Function, Params, Point, SolutionStatus};
use nalgebra::{DMatrix, DVector};
use proptest::prelude::*;
use rand::Rng;

fn run(name: &str, kv: &[(&str, f64)]) -> bilevel_core::validation::ValidationVerdict {
    let p: Params = kv.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    let (d, r) = instantiate_with_record(name, &p).unwrap();
    validate(&d, &r, &Tolerances::default(), &OracleConfig::default())
}

#[test]
fn stated_optimum_is_confirmed() {
    let v = run("ShimizuAiyoshi1981Ex1", &[]);
    assert_eq!(v.points.len(), 1);
    assert_eq!(v.points[0].verdict, Verdict::Confirmed);
    assert!(v.passed());
}

#[test]
fn global_and_local_points() {
    let v = run("AiyoshiShimizu1984Ex2", &[]);
    let global = v.points.iter().find(|p| p.status == SolutionStatus::Global).unwrap();
    assert_eq!(global.verdict, Verdict::Confirmed);
    let local = v.points.iter().find(|p| p.status == SolutionStatus::Local).unwrap();
    assert_eq!(local.point, Point::new([0.0, 0.0], [-10.0, -10.0]));
    assert_eq!((local.upper_residual, local.lower_residual), (0.0, 0.0));
    assert!(local.kkt_residual.unwrap() <= 1e-9);
}

#[test]
fn both_solutions_for_rho_two() {
    let v = run("CalamaiVicente1994a", &[("rho", 2.0)]);
    assert_eq!(v.points.len(), 2);
    for p in &v.points {
        assert!(p.gap.unwrap() <= 1e-6, "{:?}", p.point);
        assert_eq!(p.verdict, Verdict::Confirmed);
    }
}

#[test]
fn no_optimum_is_not_checkable() {
    let v = run("Zlobec2001b", &[]);
    assert_eq!(v.not_checkable.as_deref(), Some("no_optimal_solution"));
    assert!(v.points.is_empty());
}

#[test]
fn cited_violating_point_is_infeasible() {
    let v = run("LuDebSinha2016a", &[]);
    let p = v.points.iter().find(|p| p.point.x == vec![1.4]).unwrap();
    assert_eq!(p.point.y, vec![0.2]);
    assert_eq!(p.verdict, Verdict::Infeasible);
    assert!(v.findings.iter().any(|f| f.kind == FindingKind::Infeasible));
}

#[test]
fn conflicting_claims_are_reported() {
    let v = run("Bard1988Ex2", &[]);
    let c: Vec<_> = v.findings.iter().filter(|f| f.kind == FindingKind::ClaimConflict).collect();
    assert_eq!(c.len(), 1);
    assert_eq!(c[0].quantity, "f");
    let pair = [c[0].claimed.unwrap(), c[0].observed.unwrap()];
    assert!(pair.contains(&57.48) && pair.contains(&54.0));
}

#[test]
fn unconstrained_interior_point_has_zero_kkt() {
    let (p, r) = lookup("MitsosBarton2006Ex312").unwrap();
    assert_eq!(kkt_residual(&p, &r, &Point::new([0.0], [0.0]), 1e-6).unwrap(), 0.0);
    let (p, r) = lookup("OutrataCervinka2009").unwrap();
    let origin = Point::new([0.0, 0.0], [0.0, 0.0]);
    assert!(kkt_residual(&p, &r, &origin, 1e-6).unwrap() <= 1e-12);
}

#[test]
fn feasibility_of_empty_upper_block() {
    let (p, _) = lookup("CalamaiVicente1994a").unwrap();
    assert_eq!(feasibility(&p, &Point::new([3.0], [-7.0])).unwrap().0, 0.0);
}

#[test]
fn oracle_examples() {
    let cfg = OracleConfig::default();
    let (p, _) = lookup("Bard1988Ex1").unwrap();
    let o = lower_level_oracle(&p, &[1.0], &cfg).unwrap();
    assert!(o.y[0].abs() < 1e-5 && (o.f - 1.0).abs() < 1e-8, "{o:?}");
    let (p, _) = lookup("MitsosBarton2006Ex310").unwrap();
    let o = lower_level_oracle(&p, &[0.5], &cfg).unwrap();
    assert!((o.y[0] - 0.5).abs() < 1e-5, "{o:?}");
    let (p, _) = lookup("HenrionSurowiec2011").unwrap();
    let o = lower_level_oracle(&p, &[-0.5], &cfg).unwrap();
    assert!((o.y[0] + 0.5).abs() < 1e-5, "{o:?}");
}

const SMALL: [&str; 5] = ["Bard1988Ex1", "ShimizuAiyoshi1981Ex2", "MitsosBarton2006Ex310", "ClarkWesterberg1990a", "Colson2002BIPA3"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn finer_grid_never_worse(k in 0usize..SMALL.len(), u in prop::collection::vec(0.0f64..1.0, 2)) {
        let (p, _) = lookup(SMALL[k]).unwrap();
        let x: Vec<f64> = p.x_bounds().iter().zip(&u).map(|(b, t)| b.lo + t * b.width()).collect();
        let coarse = OracleConfig { grid: [51, 21, 7], ..OracleConfig::default() };
        let fine = OracleConfig { grid: [101, 41, 13], ..OracleConfig::default() };
        if let (Ok(a), Ok(b)) = (lower_level_oracle(&p, &x, &coarse), lower_level_oracle(&p, &x, &fine)) {
            prop_assert!(b.f_min <= a.f_min + 1e-8, "{} x={:?}: {} vs {}", SMALL[k], x, b.f_min, a.f_min);
        }
    }

    #[test]
    fn zero_kkt_survives_row_scaling(seed in any::<u64>()) {
        // Known solutions with zero fitted residual: rescaling the active
        // constraint rows by positive factors must keep a zero residual.
        let mut rng = problem_rng(seed, "scaling");
        for name in ["AiyoshiShimizu1984Ex2", "CalamaiVicente1994a", "ShimizuAiyoshi1981Ex1"] {
            let (p, r) = lookup(name).unwrap();
            let pt = r.known_solutions[0].point.clone().unwrap();
            let fit = kkt_fit(&p, &pt, 1e-6).unwrap();
            prop_assume!(fit.residual == 0.0);
            let grad = p.evaluate(&pt, EvalSelector::new(Function::LowerObjective, Derivative::Dy)).unwrap();
            let jac = p.evaluate(&pt, EvalSelector::new(Function::LowerConstraints, Derivative::Dy)).unwrap();
            let ny = p.dims().n_y;
            let scale: Vec<f64> = fit.active.iter().map(|_| rng.random_range(0.1..10.0)).collect();
            let a = DMatrix::from_fn(ny, fit.active.len(), |k, j| scale[j] * jac.get(fit.active[j], k));
            let b = DVector::from_fn(ny, |k, _| -grad.get(k, 0));
            let lam = nnls(&a, &b);
            let res = (&a * &lam - &b).norm();
            prop_assert!(lam.iter().all(|l| *l >= 0.0));
            prop_assert!(res <= 1e-9 * (1.0 + b.norm()), "{}: {}", name, res);
        }
    }
}
