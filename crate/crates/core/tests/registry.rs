use bilevel_core::registry::instantiate_with_record;
use bilevel_core::{instantiate, list, lookup, record, records, Dimensions, Error, Function, Label, Params, SolutionStatus};

fn params(kv: &[(&str, f64)]) -> Params {
    kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[test]
fn lookup_reports_dimensions() {
    let (p, r) = lookup("ShimizuEtal1997a").unwrap();
    assert_eq!(p.dims(), Dimensions::new(1, 1, 0, 3));
    assert_eq!(r.dims, p.dims());
}

#[test]
fn unknown_problem() {
    assert!(matches!(lookup("NoSuchProblem1999"), Err(Error::UnknownProblem(_))));
}

#[test]
fn stated_point_is_stored() {
    let r = record("MitsosBarton2006Ex39").unwrap();
    let p = r.known_solutions[0].point.as_ref().unwrap();
    assert_eq!((p.x.as_slice(), p.y.as_slice()), (&[-1.0][..], &[-1.0][..]));
}

#[test]
fn list_is_sorted_and_complete() {
    let all = list(None);
    assert_eq!(all.len(), records().count());
    assert!(all.windows(2).all(|w| w[0] < w[1]));
    let no_upper = list(Some(&|r| r.dims.n_upper == 0));
    assert!(no_upper.iter().any(|n| n == "CalamaiVicente1994a"));
}

#[test]
fn comment_variants_are_distinct_records() {
    for name in [
        "Outrata1990Ex1b",
        "Outrata1990Ex1c",
        "Outrata1990Ex1d",
        "Outrata1990Ex1e",
        "Outrata1990Ex2b",
        "Outrata1990Ex2c",
        "Outrata1990Ex2d",
        "Outrata1990Ex2e",
        "Outrata1993Ex32",
        "YeZhu2010Ex43",
    ] {
        assert!(record(name).is_ok(), "{name}");
    }
}

#[test]
fn equality_origin_matches_table_two() {
    let eq = list(Some(&|r| r.flags.has_equality_origin));
    assert_eq!(eq.len(), 4, "{eq:?}");
    for n in &eq {
        let r = record(n).unwrap();
        assert!(r.n_eq_upper + r.n_eq_lower > 0);
    }
}

#[test]
fn known_points_fit_dimensions() {
    for r in records() {
        for s in &r.known_solutions {
            for p in s.point.iter().chain(s.point_end.iter()) {
                p.check(r.dims).unwrap_or_else(|e| panic!("{}: {e}", r.name));
            }
        }
    }
}

#[test]
fn absent_functions_are_labelled_o() {
    for r in records() {
        assert_eq!(r.labels.get(Function::UpperConstraints) == Label::O, r.dims.n_upper == 0, "{}", r.name);
        assert_eq!(r.labels.get(Function::LowerConstraints) == Label::O, r.dims.n_lower == 0, "{}", r.name);
    }
}

#[test]
fn henrion_surowiec_has_no_lower_constraints() {
    let r = record("HenrionSurowiec2011").unwrap();
    assert_eq!(r.labels.get(Function::LowerConstraints), Label::O);
}

#[test]
fn calamai_vicente_depends_on_rho() {
    let (_, r) = instantiate_with_record("CalamaiVicente1994a", &params(&[("rho", 1.0)])).unwrap();
    let pts: Vec<_> = r.known_solutions.iter().filter_map(|s| s.point.clone()).collect();
    assert_eq!(pts.len(), 1);
    assert_eq!(pts[0].x, vec![1.0]);
    assert_eq!(pts[0].y, vec![0.0]);

    let (_, r) = instantiate_with_record("CalamaiVicente1994a", &params(&[("rho", 2.0)])).unwrap();
    let mut xs: Vec<(f64, f64)> = r
        .known_solutions
        .iter()
        .filter_map(|s| s.point.as_ref())
        .map(|p| (p.x[0], p.y[0]))
        .collect();
    xs.sort_by(|a, b| a.0.total_cmp(&b.0));
    assert_eq!(xs, vec![(0.5, 0.5), (1.5, 0.5)]);
    assert!(r.known_solutions.iter().all(|s| s.status == SolutionStatus::Global));
}

#[test]
fn henrion_surowiec_zero_parameter() {
    let (_, r) = instantiate_with_record("HenrionSurowiec2011", &params(&[("c", 0.0)])).unwrap();
    let p = r.known_solutions[0].point.as_ref().unwrap();
    assert_eq!(p.x, vec![0.0]);
    assert_eq!(p.y, vec![0.0]);
}

#[test]
fn parameter_ranges_are_enforced() {
    assert!(matches!(
        instantiate("CalamaiVicente1994a", &params(&[("rho", 0.5)])),
        Err(Error::ParameterOutOfRange { .. })
    ));
    assert!(matches!(
        instantiate("IshizukaAiyoshi1992a", &params(&[("M", 1.0)])),
        Err(Error::ParameterOutOfRange { .. })
    ));
    assert!(matches!(
        instantiate("Bard1988Ex1", &params(&[("rho", 2.0)])),
        Err(Error::UnknownParameter { .. })
    ));
    assert!(instantiate("HenrionSurowiec2011", &params(&[("c", -3.0)])).is_ok());
}

#[test]
fn value_only_entries_have_claims() {
    let r = record("Bard1988Ex3").unwrap();
    let s = &r.known_solutions[0];
    assert!(s.point.is_none());
    assert_eq!((s.claimed_upper, s.claimed_lower), (Some(-12.68), Some(-1.02)));
    let r = record("CalamaiVicente1994c").unwrap();
    let s = &r.known_solutions[0];
    assert_eq!((s.claimed_upper, s.claimed_lower), (Some(0.3125), None));
}

#[test]
fn zlobec_2001b_has_no_optimum() {
    let r = record("Zlobec2001b").unwrap();
    assert!(r.flags.no_optimal_solution);
    assert!(r.known_solutions.iter().all(|s| s.point.is_none()));
}
