use bilevel_core::derivcheck::{check_problem, fd_first, fd_second, FdConfig, SkipReason, Wrt};
use bilevel_core::{lookup, Derivative, EvalSelector, Function, Point};

#[test]
fn worked_example_gradient() {
    let (p, _) = lookup("ShimizuEtal1997a").unwrap();
    let t = fd_first(&p, &Point::new([4.0], [0.0]), Function::UpperObjective, Wrt::X, 1e-6).unwrap();
    assert!((t.get(0, 0) + 2.0).abs() < 1e-6);
    let t = fd_second(&p, &Point::new([4.0], [0.0]), Function::LowerConstraints, Derivative::Dyy, 1e-6).unwrap();
    assert_eq!(t.shape(), (3, 1));
    assert!(t.max_abs() < 1e-9);
}

#[test]
fn exponential_gradient_against_closed_form() {
    // d/dy [exp(y - x) + x^2 + 2xy + y^2 + 2x + 6y] = exp(y - x) + 2x + 2y + 6
    let (p, _) = lookup("Colson2002BIPA3").unwrap();
    for (x, y) in [(1.0, 1.0), (0.5, 2.0), (2.0, 0.25)] {
        let pt = Point::new([x], [y]);
        let expected = f64::exp(y - x) + 2.0 * x + 2.0 * y + 6.0;
        let fd = fd_first(&p, &pt, Function::LowerObjective, Wrt::Y, 1e-6).unwrap();
        assert!((fd.get(0, 0) - expected).abs() < 1e-7 * expected);
        let an = p.evaluate(&pt, EvalSelector::new(Function::LowerObjective, Derivative::Dy)).unwrap();
        assert!((an.get(0, 0) - expected).abs() < 1e-12 * expected);
    }
}

#[test]
fn linear_constraints_match_exactly() {
    let (p, _) = lookup("Colson2002BIPA3").unwrap();
    let pt = Point::new([1.3], [0.7]);
    for (wrt, d) in [(Wrt::X, Derivative::Dx), (Wrt::Y, Derivative::Dy)] {
        let fd = fd_first(&p, &pt, Function::UpperConstraints, wrt, 1e-6).unwrap();
        let an = p.evaluate(&pt, EvalSelector::new(Function::UpperConstraints, d)).unwrap();
        for (a, b) in fd.as_slice().iter().zip(an.as_slice()) {
            assert!((a - b).abs() < 1e-9);
        }
    }
}

#[test]
fn mixed_partial_matches() {
    let (p, _) = lookup("MitsosBarton2006Ex321").unwrap();
    let pt = Point::new([0.1], [0.1]);
    let fd = fd_second(&p, &pt, Function::LowerObjective, Derivative::Dxy, 1e-6).unwrap();
    let an = p.evaluate(&pt, EvalSelector::new(Function::LowerObjective, Derivative::Dxy)).unwrap();
    assert!((fd.get(0, 0) - an.get(0, 0)).abs() <= 1e-6 * an.get(0, 0).abs().max(1.0));
}

#[test]
fn worked_example_passes() {
    let (p, _) = lookup("ShimizuEtal1997a").unwrap();
    let r = check_problem(&p, &FdConfig::default());
    assert!(r.passed);
    assert_eq!(r.points_checked, 20);
    assert_eq!(r.checks.len(), 20);
}

#[test]
fn piecewise_problem_skips_kinks() {
    let (p, _) = lookup("MorganPatrone2006b").unwrap();
    let r = check_problem(&p, &FdConfig::default());
    assert!(r.passed);
    assert!(r.skipped.iter().all(|s| s.reason == SkipReason::NonsmoothPoint));
    assert!(r.points_checked >= 20);
}

#[test]
fn negative_powers_surface_as_skips() {
    let (p, _) = lookup("GumusFloudas2001Ex5").unwrap();
    let r = check_problem(&p, &FdConfig::default());
    assert!(r.points_checked > 0);
    assert!(r.skipped.iter().all(|s| s.reason != SkipReason::NonsmoothPoint));
}

#[test]
fn tolerance_below_noise_floor_fails() {
    let (p, _) = lookup("Bard1988Ex1").unwrap();
    let cfg = FdConfig {
        rel_tol: 1e-12,
        abs_tol: 1e-14,
        ..FdConfig::default()
    };
    assert!(!check_problem(&p, &cfg).passed);
}

#[test]
fn seeded_runs_repeat() {
    let (p, _) = lookup("Colson2002BIPA3").unwrap();
    let cfg = FdConfig {
        seed: 42,
        ..FdConfig::default()
    };
    let a = serde_json::to_string(&check_problem(&p, &cfg)).unwrap();
    let b = serde_json::to_string(&check_problem(&p, &cfg)).unwrap();
    assert_eq!(a, b);
}
