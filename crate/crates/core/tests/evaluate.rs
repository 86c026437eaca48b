use bilevel_core::derivcheck::{problem_rng, sample_point};
use bilevel_core::validation::feasibility;
use bilevel_core::{
    evaluate, lookup, records, shape_of, Derivative, Dimensions, Error, EvalSelector, Function, Label, Point, Tensor,
};
use proptest::prelude::*;

fn sel(func: Function, deriv: Derivative) -> EvalSelector {
    EvalSelector::new(func, deriv)
}

fn eval(name: &str, x: &[f64], y: &[f64], func: Function, deriv: Derivative) -> Tensor {
    let (p, _) = lookup(name).unwrap();
    evaluate(&p, &Point::new(x, y), sel(func, deriv)).unwrap()
}

#[test]
fn worked_example_rows() {
    use Derivative::*;
    use Function::*;
    let x = [4.0];
    let y = [0.0];
    assert_eq!(eval("ShimizuEtal1997a", &x, &y, UpperObjective, Value), Tensor::scalar(2.0));
    assert_eq!(eval("ShimizuEtal1997a", &x, &y, UpperObjective, Dx), Tensor::scalar(-2.0));
    assert!(eval("ShimizuEtal1997a", &x, &y, UpperConstraints, Dy).is_empty());
    assert_eq!(eval("ShimizuEtal1997a", &x, &y, LowerObjective, Dxy), Tensor::scalar(-1.5));
    assert_eq!(eval("ShimizuEtal1997a", &x, &y, LowerConstraints, Dyy), Tensor::column(vec![0.0; 3]));
}

#[test]
fn hand_substituted_values() {
    use Derivative::Value;
    use Function::*;
    let f = |n: &str, x: &[f64], y: &[f64], func| eval(n, x, y, func, Value).as_scalar().unwrap();
    assert_eq!(f("AiyoshiShimizu1984Ex2", &[25.0, 30.0], &[5.0, 10.0], UpperObjective), 5.0);
    assert_eq!(f("Bard1988Ex1", &[1.0], &[0.0], UpperObjective), 17.0);
    assert_eq!(f("Bard1988Ex1", &[1.0], &[0.0], LowerObjective), 1.0);
    let y: Vec<f64> = vec![0.0; 10];
    let x: Vec<f64> = vec![1.0; 10];
    assert_eq!(f("SinhaMaloDeb2014TP9", &x, &y, UpperObjective), 0.0);
    assert_eq!(f("SinhaMaloDeb2014TP9", &x, &y, LowerObjective), 1.0);
}

#[test]
fn feasibility_at_stated_points() {
    let (p, _) = lookup("AiyoshiShimizu1984Ex2").unwrap();
    assert_eq!(feasibility(&p, &Point::new([25.0, 30.0], [5.0, 10.0])).unwrap(), (0.0, 0.0));
    let (p, _) = lookup("Bard1991Ex1").unwrap();
    assert_eq!(feasibility(&p, &Point::new([2.0], [6.0, 0.0])).unwrap(), (0.0, 0.0));
}

#[test]
fn wrong_lengths_are_rejected() {
    let (p, _) = lookup("Bard1988Ex1").unwrap();
    let r = evaluate(&p, &Point::new([1.0, 2.0], [0.0]), sel(Function::UpperObjective, Derivative::Value));
    assert!(matches!(r, Err(Error::DimensionMismatch { .. })));
    let r = evaluate(&p, &Point::new([1.0], []), sel(Function::UpperObjective, Derivative::Value));
    assert!(matches!(r, Err(Error::DimensionMismatch { .. })));
}

#[test]
fn domain_violation_is_reported() {
    let (p, _) = lookup("GumusFloudas2001Ex5").unwrap();
    let d = p.dims();
    let pt = Point::new(vec![-1.0; d.n_x], vec![1.0; d.n_y]);
    let r = evaluate(&p, &pt, sel(Function::UpperObjective, Derivative::Value));
    assert!(matches!(r, Err(Error::DomainViolation { .. })), "{r:?}");
}

#[test]
fn shape_of_examples() {
    assert_eq!(shape_of(Dimensions::new(1, 1, 0, 3), sel(Function::LowerConstraints, Derivative::Dyy)), (3, 1));
    assert_eq!(shape_of(Dimensions::new(2, 2, 3, 1), sel(Function::UpperConstraints, Derivative::Dxy)), (6, 2));
    assert_eq!(shape_of(Dimensions::new(2, 3, 1, 1), sel(Function::UpperObjective, Derivative::Dxy)), (3, 2));
    assert_eq!(shape_of(Dimensions::new(2, 3, 1, 1), sel(Function::UpperConstraints, Derivative::Dx)), (1, 2));
}

#[test]
fn linear_objectives_have_zero_hessians() {
    for r in records().filter(|r| r.labels.get(Function::UpperObjective) == Label::L) {
        let (p, _) = lookup(&r.name).unwrap();
        let mut rng = problem_rng(11, &r.name);
        let pt = sample_point(&mut rng, &p.sampling_box(), r.dims.n_x, 1e-3);
        for d in [Derivative::Dxx, Derivative::Dxy, Derivative::Dyy] {
            if let Ok(t) = evaluate(&p, &pt, sel(Function::UpperObjective, d)) {
                assert_eq!(t.max_abs(), 0.0, "{} F{}", r.name, d.key());
            }
        }
    }
}

fn names() -> Vec<String> {
    records().map(|r| r.name.clone()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shapes_symmetry_and_purity(seed in any::<u64>()) {
        for name in names() {
            let (p, _) = lookup(&name).unwrap();
            let dims = p.dims();
            let sbox = p.sampling_box();
            let mut rng = problem_rng(seed, &name);
            for _ in 0..5 {
                let pt = sample_point(&mut rng, &sbox, dims.n_x, 1e-3);
                for s in EvalSelector::all() {
                    let Ok(t) = evaluate(&p, &pt, s) else { continue };
                    prop_assert_eq!(t.shape(), shape_of(dims, s), "{} {}", name, s);
                    let again = evaluate(&p, &pt, s).unwrap();
                    prop_assert!(
                        t.as_slice().iter().zip(again.as_slice()).all(|(a, b)| a.to_bits() == b.to_bits()),
                        "{} {} not bit-identical", name, s
                    );
                    let square = matches!(s.deriv, Derivative::Dxx | Derivative::Dyy) && !s.func.is_constraint();
                    if square && !t.is_empty() {
                        prop_assert_eq!(t.clone(), t.transpose(), "{} {} not symmetric", name, s);
                    }
                    if s.func.is_constraint() && dims.constraint_count(s.func) == 0 {
                        prop_assert!(t.is_empty());
                    }
                }
            }
        }
    }
}
