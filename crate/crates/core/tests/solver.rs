use bilevel_core::solver::{solve_nested, SolveConfig};
use bilevel_core::registry::instantiate_with_record;
use bilevel_core::{lookup, Params};
use proptest::prelude::*;

#[test]
fn recovers_bard_optimum() {
    let (p, _) = lookup("Bard1988Ex1").unwrap();
    let r = solve_nested(&p, &SolveConfig { seed: 1, ..SolveConfig::default() }).unwrap();
    assert!((r.upper - 17.0).abs() <= 1e-2, "{r:?}");
    assert!((r.point.x[0] - 1.0).abs() <= 1e-2 && r.point.y[0].abs() <= 1e-2);
}

#[test]
fn recovers_clark_westerberg_optimum() {
    let (p, _) = lookup("ClarkWesterberg1990a").unwrap();
    let r = solve_nested(&p, &SolveConfig::default()).unwrap();
    assert!((r.upper - 5.0).abs() <= 1e-2, "{r:?}");
    assert!((r.point.x[0] - 1.0).abs() <= 1e-2 && (r.point.y[0] - 3.0).abs() <= 1e-2);
}

#[test]
fn recovers_henrion_surowiec_optimum() {
    let c: Params = [("c".to_string(), 1.0)].into();
    let (p, _) = instantiate_with_record("HenrionSurowiec2011", &c).unwrap();
    let r = solve_nested(&p, &SolveConfig::default()).unwrap();
    assert!((r.point.x[0] + 0.5).abs() <= 1e-2 && (r.point.y[0] + 0.5).abs() <= 1e-2, "{r:?}");
}

#[test]
fn identical_under_fixed_seed() {
    let (p, _) = lookup("ShimizuAiyoshi1981Ex1").unwrap();
    let cfg = SolveConfig {
        multistarts: 8,
        budget: 2_000,
        seed: 5,
        ..SolveConfig::default()
    };
    let a = serde_json::to_string(&solve_nested(&p, &cfg).unwrap()).unwrap();
    let b = serde_json::to_string(&solve_nested(&p, &cfg).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn trace_is_in_start_order() {
    let (p, _) = lookup("Bard1988Ex1").unwrap();
    let r = solve_nested(&p, &SolveConfig { multistarts: 6, budget: 600, ..SolveConfig::default() }).unwrap();
    assert!(r.trace.windows(2).all(|w| w[0].start <= w[1].start));
    assert!(r.trace.iter().any(|t| t.upper == r.upper));
}

const CASES: [&str; 4] = ["Bard1988Ex1", "ShimizuAiyoshi1981Ex2", "MitsosBarton2006Ex312", "LamparielloSagratella2017Ex31"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn returned_point_is_feasible(k in 0usize..CASES.len(), seed in any::<u64>()) {
        let (p, _) = lookup(CASES[k]).unwrap();
        let cfg = SolveConfig { multistarts: 3, budget: 150, polish: 50, seed, ..SolveConfig::default() };
        if let Ok(r) = solve_nested(&p, &cfg) {
            prop_assert!(r.upper_residual <= 1e-6 && r.lower_residual <= 1e-6);
        }
    }
}
