//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero when a criterion fails in a way that is not documented below.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bilevel_core::derivcheck::{check_all, problem_rng, sample_point, FdConfig};
use bilevel_core::mpcc::{build_mpcc, mpcc_residual, MpccPoint};
use bilevel_core::oracle::OracleConfig;
use bilevel_core::registry::instantiate_with_record;
use bilevel_core::report::{self, RunKind, RunReport, SolveRow};
use bilevel_core::solver::{solve_nested, SolveConfig};
use bilevel_core::validation::{validate_all, FindingKind, Tolerances, Verdict};
use bilevel_core::{
    evaluate, lookup, records, shape_of, Derivative, EvalSelector, Function, Params, Point, ProblemDefinition,
    ProblemRecord, Tensor,
};
use serde_json::json;

const SEED: u64 = 7;
const FD_REL_TOL: f64 = 1e-4;
const FD_SAMPLES: usize = 20;
const FEAS_TOL: f64 = 1e-6;
const GAP_TOL: f64 = 1e-3;
const VALUE_REL: f64 = 1e-3;
const SOLVE_TOL: f64 = 1e-2;
const MPCC_TOL: f64 = 1e-10;
const SHAPE_POINTS: usize = 5;

const LIMIT_WORKED: Duration = Duration::from_secs(1);
const LIMIT_DERIV: Duration = Duration::from_secs(60);
const LIMIT_SOLVE: Duration = Duration::from_secs(120);

/// Stated global/best-known points that fail feasibility or lower-level
/// optimality as printed, keyed by (problem, solution index, family sample).
const DOCUMENTED_OFFENDERS: &[(&str, usize, Option<usize>)] = &[
    ("Colson2002BIPA4", 0, None),
    ("Colson2002BIPA5", 0, None),
    ("Dempe1992a", 0, None),
    ("DempeDutta2012Ex31", 0, None),
    ("DempeLohse2011Ex31a", 0, None),
    ("IshizukaAiyoshi1992a", 0, Some(0)),
    ("IshizukaAiyoshi1992a", 0, Some(1)),
    ("LuDebSinha2016a", 1, None),
    ("LuDebSinha2016b", 0, None),
    ("LuDebSinha2016d", 0, None),
    ("MitsosBarton2006Ex323", 0, None),
    ("MitsosBarton2006Ex324", 0, None),
    ("MitsosBarton2006Ex328", 1, None),
    ("MuuQuy2003Ex2", 0, None),
    ("NieEtal2017Ex54", 0, None),
    ("NieEtal2017Ex58", 0, None),
    ("NieEtal2017Ex61", 0, None),
    ("Outrata1990Ex1a", 0, None),
    ("Outrata1990Ex1c", 0, None),
    ("Outrata1990Ex1e", 0, None),
    ("Outrata1990Ex2a", 0, None),
    ("Outrata1990Ex2b", 0, None),
    ("Outrata1990Ex2c", 0, None),
    ("Outrata1990Ex2d", 0, None),
    ("TuyEtal2007", 0, None),
    ("Zlobec2001a", 0, None),
];

const SOLVER_SUBSET: &[(&str, &[(&str, f64)])] = &[
    ("Bard1988Ex1", &[]),
    ("ClarkWesterberg1990a", &[]),
    ("ShimizuAiyoshi1981Ex1", &[]),
    ("ShimizuAiyoshi1981Ex2", &[]),
    ("LamparielloSagratella2017Ex31", &[]),
    ("HenrionSurowiec2011", &[("c", 1.0)]),
    ("MitsosBarton2006Ex312", &[]),
];

struct Outcome {
    pass: bool,
    /// A failure that matches the documented analysis.
    expected_failure: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: String) -> Self {
        Self {
            pass,
            expected_failure: false,
            detail,
        }
    }
}

fn line(n: usize, title: &str, o: &Outcome) {
    let tag = if o.pass { "PASS" } else { "FAIL" };
    println!("criterion {n} [{tag}] {title}: {}", o.detail);
}

fn all_problems() -> Vec<(ProblemDefinition, ProblemRecord)> {
    records().map(|r| lookup(&r.name).unwrap()).collect()
}

fn sel(func: Function, deriv: Derivative) -> EvalSelector {
    EvalSelector::new(func, deriv)
}

fn criterion1() -> Outcome {
    let t = Instant::now();
    let (p, _) = lookup("ShimizuEtal1997a").unwrap();
    let pt = Point::new([4.0], [0.0]);
    let rows = [
        (sel(Function::UpperObjective, Derivative::Value), Tensor::scalar(2.0)),
        (sel(Function::UpperObjective, Derivative::Dx), Tensor::scalar(-2.0)),
        (sel(Function::UpperConstraints, Derivative::Dy), Tensor::empty()),
        (sel(Function::LowerObjective, Derivative::Dxy), Tensor::scalar(-1.5)),
        (sel(Function::LowerConstraints, Derivative::Dyy), Tensor::column(vec![0.0; 3])),
    ];
    let bad: Vec<String> = rows
        .iter()
        .filter_map(|(s, want)| {
            let got = evaluate(&p, &pt, *s).unwrap();
            (&got != want).then(|| format!("{s}: {got} != {want}"))
        })
        .collect();
    let dt = t.elapsed();
    Outcome::new(
        bad.is_empty() && dt < LIMIT_WORKED,
        format!("{}/5 rows exact, {:.3}s {}", 5 - bad.len(), dt.as_secs_f64(), bad.join("; ")),
    )
}

fn criterion2(problems: &[ProblemDefinition]) -> (Outcome, RunReport) {
    let cfg = FdConfig {
        rel_tol: FD_REL_TOL,
        samples: FD_SAMPLES,
        seed: SEED,
        ..FdConfig::default()
    };
    let t = Instant::now();
    let reports = check_all(problems, &cfg);
    let dt = t.elapsed();
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed || r.points_checked < FD_SAMPLES || r.checks.len() != 20)
        .map(|r| r.problem.as_str())
        .collect();
    let skipped: usize = reports.iter().map(|r| r.skipped.len()).sum();
    let mut rep = RunReport::new(RunKind::Derivcheck, &cfg);
    for r in &reports {
        rep.push(r);
    }
    rep.set_summary(&report::derivcheck_summary(&reports));
    let o = Outcome::new(
        failed.is_empty() && dt < LIMIT_DERIV,
        format!(
            "{}/{} problems pass all 20 selectors at {} points, {skipped} draws skipped, {:.1}s {}",
            reports.len() - failed.len(),
            reports.len(),
            FD_SAMPLES,
            dt.as_secs_f64(),
            failed.join(" ")
        ),
    );
    (o, rep)
}

fn criterion3(problems: &[ProblemDefinition]) -> (Outcome, RunReport) {
    let mut rep = RunReport::new(RunKind::Eval, &json!({"seed": SEED, "points": SHAPE_POINTS}));
    let mut evaluated = 0usize;
    let mut failures = Vec::new();
    for p in problems {
        let mut rng = problem_rng(SEED, p.name());
        let sbox = p.sampling_box();
        let mut done = 0;
        let mut draws = 0;
        while done < SHAPE_POINTS && draws < 100 * SHAPE_POINTS {
            draws += 1;
            let pt = sample_point(&mut rng, &sbox, p.dims().n_x, 1e-6);
            let Ok(all) = EvalSelector::all().map(|s| evaluate(p, &pt, s).map(|t| (s, t))).collect::<Result<Vec<_>, _>>()
            else {
                continue;
            };
            done += 1;
            for (s, t) in all {
                evaluated += 1;
                if t.shape() != shape_of(p.dims(), s) {
                    failures.push(format!("{} {s}", p.name()));
                }
            }
        }
        rep.push(&json!({"problem": p.name(), "points": done}));
        if done < SHAPE_POINTS {
            failures.push(format!("{}: only {done} evaluable points", p.name()));
        }
    }
    rep.set_summary(&json!({"evaluations": evaluated, "failures": failures.len()}));
    let o = Outcome::new(
        failures.is_empty(),
        format!(
            "{evaluated} evaluations over {} problems x 24 selectors x {SHAPE_POINTS} points, {} failures {}",
            problems.len(),
            failures.len(),
            failures.join("; ")
        ),
    );
    (o, rep)
}

fn criterion4(items: &[(ProblemDefinition, ProblemRecord)]) -> (Outcome, RunReport) {
    let tol = Tolerances {
        feasibility: FEAS_TOL,
        value_rel: VALUE_REL,
        gap: GAP_TOL,
        ..Tolerances::default()
    };
    let oracle = OracleConfig::default();
    let verdicts = validate_all(items, &tol, &oracle);
    let mut rep = RunReport::new(RunKind::Validate, &json!({"tolerances": tol, "oracle": oracle}));
    for v in &verdicts {
        rep.push(v);
    }
    rep.set_summary(&report::validation_summary(&verdicts));

    let mut checked = 0;
    let mut offenders = BTreeSet::new();
    let mut missing_value_findings = Vec::new();
    for v in &verdicts {
        for p in v.points.iter().filter(|p| p.status.is_claimed_optimal()) {
            checked += 1;
            let feasible = p.upper_residual <= FEAS_TOL && p.lower_residual <= FEAS_TOL;
            let optimal = p.gap.is_some_and(|g| g <= GAP_TOL);
            if !(feasible && optimal) {
                offenders.insert((v.problem.clone(), p.solution, p.sample));
            }
            for (quantity, err) in [("F", p.upper_error), ("f", p.lower_error)] {
                let flagged = v.findings.iter().any(|f| {
                    f.kind == FindingKind::ValueDiscrepancy && f.solution == Some(p.solution) && f.quantity == quantity
                });
                if err.is_some_and(|e| e > 0.0) && p.verdict == Verdict::ValueMismatch && !flagged {
                    missing_value_findings.push(format!("{} {quantity}", v.problem));
                }
            }
        }
    }
    let bard_conflict = verdicts.iter().any(|v| {
        v.problem == "Bard1988Ex2"
            && v.findings.iter().any(|f| {
                f.kind == FindingKind::ClaimConflict
                    && f.quantity == "f"
                    && [f.claimed, f.observed].contains(&Some(57.48))
                    && [f.claimed, f.observed].contains(&Some(54.0))
            })
    });
    let documented: BTreeSet<(String, usize, Option<usize>)> =
        DOCUMENTED_OFFENDERS.iter().map(|(n, s, k)| (n.to_string(), *s, *k)).collect();
    let strict = offenders.is_empty() && missing_value_findings.is_empty() && bard_conflict;
    let names: Vec<String> = offenders
        .iter()
        .map(|(n, s, k)| match k {
            Some(k) => format!("{n}#{s}.{k}"),
            None => format!("{n}#{s}"),
        })
        .collect();
    let unexpected: Vec<_> = offenders.symmetric_difference(&documented).collect();
    let mut o = Outcome::new(
        strict,
        format!(
            "{} of {checked} global/best-known points fail feasibility {FEAS_TOL:e} or gap {GAP_TOL:e} as stated; \
             value findings complete: {}; Bard1988Ex2 claim conflict reported: {bard_conflict}; offenders: {}; \
             differences from documented set: {:?}",
            offenders.len(),
            missing_value_findings.is_empty(),
            names.join(" "),
            unexpected
        ),
    );
    o.expected_failure = unexpected.is_empty() && missing_value_findings.is_empty() && bard_conflict;
    (o, rep)
}

fn criterion5() -> Outcome {
    let scalar = |name: &str, x: &[f64], y: &[f64]| {
        let (p, _) = lookup(name).unwrap();
        evaluate(&p, &Point::new(x, y), sel(Function::UpperObjective, Derivative::Value))
            .unwrap()
            .as_scalar()
            .unwrap()
    };
    let a = scalar("AiyoshiShimizu1984Ex2", &[25.0, 30.0], &[5.0, 10.0]);
    let b = scalar("Bard1988Ex1", &[1.0], &[0.0]);
    let rho: Params = [("rho".to_string(), 2.0)].into();
    let item = instantiate_with_record("CalamaiVicente1994a", &rho).unwrap();
    let v = &validate_all(&[item], &Tolerances::default(), &OracleConfig::default())[0];
    let want = [Point::new([0.5], [0.5]), Point::new([1.5], [0.5])];
    let ok_points = want
        .iter()
        .filter(|w| {
            v.points.iter().any(|p| {
                &p.point == *w
                    && p.upper_residual <= FEAS_TOL
                    && p.lower_residual <= FEAS_TOL
                    && p.gap.is_some_and(|g| g <= GAP_TOL)
            })
        })
        .count();
    Outcome::new(
        a == 5.0 && b == 17.0 && ok_points == 2,
        format!("AiyoshiShimizu1984Ex2 F = {a}, Bard1988Ex1 F = {b}, CalamaiVicente1994a rho=2: {ok_points}/2 points lower-optimal"),
    )
}

fn criterion6() -> (Outcome, RunReport) {
    let cfg = SolveConfig::default();
    let mut rep = RunReport::new(RunKind::Solve, &cfg);
    let t = Instant::now();
    let mut rows = Vec::new();
    let mut misses = Vec::new();
    let mut parts = Vec::new();
    for (name, kv) in SOLVER_SUBSET {
        let params: Params = kv.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        let (p, r) = instantiate_with_record(name, &params).unwrap();
        let stated = r.known_solutions[0].point.clone().unwrap();
        let target = evaluate(&p, &stated, sel(Function::UpperObjective, Derivative::Value))
            .unwrap()
            .as_scalar()
            .unwrap();
        let out = solve_nested(&p, &cfg);
        let row = SolveRow::new(&r, &out);
        let got = row.upper.unwrap_or(f64::NAN);
        if !((got - target).abs() <= SOLVE_TOL) {
            misses.push(*name);
        }
        parts.push(format!("{name} {got:.5} (target {target})"));
        rep.push(&row);
        rows.push(row);
    }
    let dt = t.elapsed();
    rep.set_summary(&report::solve_summary(&rows));
    let o = Outcome::new(
        misses.is_empty() && dt < LIMIT_SOLVE,
        format!("{}/{} within {SOLVE_TOL:e}, {:.1}s: {}", rows.len() - misses.len(), rows.len(), dt.as_secs_f64(), parts.join(", ")),
    );
    (o, rep)
}

fn criterion7(items: &[(ProblemDefinition, ProblemRecord)], validation: &RunReport) -> Outcome {
    let verdicts: Vec<bilevel_core::validation::ValidationVerdict> =
        validation.rows.iter().map(|v| serde_json::from_value(v.clone()).unwrap()).collect();
    let mut compared = 0;
    let mut worst = 0.0f64;
    let mut bad = Vec::new();
    for ((p, r), v) in items.iter().zip(&verdicts) {
        if !r.flags.lower_level_kkt_checkable {
            continue;
        }
        let Ok(model) = build_mpcc(p) else { continue };
        for pc in &v.points {
            let (Some(kkt), Some(lam)) = (pc.kkt_residual, pc.multipliers.clone()) else { continue };
            if pc.verdict == Verdict::Infeasible {
                continue;
            }
            let res = mpcc_residual(&model, &MpccPoint::new(pc.point.clone(), lam)).unwrap();
            compared += 1;
            let d = (res - kkt).abs();
            worst = worst.max(d);
            if d > MPCC_TOL {
                bad.push(format!("{}#{} ({d:e})", r.name, pc.solution));
            }
        }
    }
    Outcome::new(
        bad.is_empty() && compared > 0,
        format!("{compared} validated points compared, worst |mpcc - kkt| = {worst:e} {}", bad.join(" ")),
    )
}

struct Run {
    outcomes: Vec<(usize, &'static str, Outcome)>,
    reports: Vec<RunReport>,
}

fn run_all() -> Run {
    let items = all_problems();
    let problems: Vec<ProblemDefinition> = items.iter().map(|(p, _)| p.clone()).collect();
    let c1 = criterion1();
    let (c2, r2) = criterion2(&problems);
    let (c3, r3) = criterion3(&problems);
    let (c4, r4) = criterion4(&items);
    let c5 = criterion5();
    let (c6, r6) = criterion6();
    let c7 = criterion7(&items, &r4);
    Run {
        outcomes: vec![
            (1, "worked-example fidelity", c1),
            (2, "derivative certification", c2),
            (3, "shape contract", c3),
            (4, "known-solution validation", c4),
            (5, "spot values", c5),
            (6, "baseline solver regression", c6),
            (7, "MPCC consistency", c7),
        ],
        reports: vec![r2, r3, r4, r6],
    }
}

fn main() -> ExitCode {
    // libtest passes flags such as --nocapture or a filter; none apply here.
    let args: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    if !args.is_empty() && !args.iter().any(|a| "acceptance".contains(a.as_str())) {
        return ExitCode::SUCCESS;
    }
    let first = run_all();
    for (n, title, o) in &first.outcomes {
        line(*n, title, o);
    }
    let second = run_all();
    let a: Vec<String> = first.reports.iter().map(|r| r.without_timestamp().to_jsonl()).collect();
    let b: Vec<String> = second.reports.iter().map(|r| r.without_timestamp().to_jsonl()).collect();
    let same = a == b;
    let bytes: usize = a.iter().map(String::len).sum();
    let c8 = Outcome::new(
        same,
        format!("two runs of criteria 2-6 give byte-identical reports ({bytes} bytes, timestamps excluded): {same}"),
    );
    line(8, "determinism", &c8);

    let unexplained: Vec<usize> = first
        .outcomes
        .iter()
        .filter(|(_, _, o)| !o.pass && !o.expected_failure)
        .map(|(n, _, _)| *n)
        .chain((!c8.pass).then_some(8))
        .collect();
    let documented: Vec<usize> = first
        .outcomes
        .iter()
        .filter(|(_, _, o)| !o.pass && o.expected_failure)
        .map(|(n, _, _)| *n)
        .collect();
    if !documented.is_empty() {
        println!("documented failures (stated data fails as printed): {documented:?}");
    }
    if unexplained.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexplained failures: {unexplained:?}");
        ExitCode::FAILURE
    }
}
