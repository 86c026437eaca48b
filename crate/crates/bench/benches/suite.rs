use std::hint::black_box;

use bilevel_bench::{fixture, REPRESENTATIVE};
use bilevel_core::derivcheck::{check_problem, FdConfig};
use bilevel_core::oracle::{lower_level_oracle, OracleConfig};
use bilevel_core::{Derivative, EvalSelector, Function};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn evaluation(c: &mut Criterion) {
    let mut g = c.benchmark_group("evaluate");
    for name in REPRESENTATIVE {
        let (p, pt) = fixture(name);
        g.bench_with_input(BenchmarkId::new("all_selectors", name), &pt, |b, pt| {
            b.iter(|| {
                for s in EvalSelector::all() {
                    let _ = black_box(p.evaluate(pt, s));
                }
            })
        });
        let hess = EvalSelector::new(Function::LowerConstraints, Derivative::Dyy);
        g.bench_with_input(BenchmarkId::new("g_yy", name), &pt, |b, pt| b.iter(|| black_box(p.evaluate(pt, hess))));
    }
    g.finish();
}

fn derivative_check(c: &mut Criterion) {
    let cfg = FdConfig {
        samples: 5,
        ..FdConfig::default()
    };
    let mut g = c.benchmark_group("check_problem");
    for name in REPRESENTATIVE {
        let (p, _) = fixture(name);
        g.bench_function(name, |b| b.iter(|| black_box(check_problem(&p, &cfg))));
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("lower_level_oracle");
    g.sample_size(10);
    for name in ["ShimizuEtal1997a", "AiyoshiShimizu1984Ex2", "MitsosBarton2006Ex328"] {
        let (p, pt) = fixture(name);
        for (label, cfg) in [("validation", OracleConfig::default()), ("inner", OracleConfig::inner())] {
            g.bench_with_input(BenchmarkId::new(label, name), &pt.x, |b, x| {
                b.iter(|| black_box(lower_level_oracle(&p, x, &cfg)))
            });
        }
    }
    g.finish();
}

criterion_group!(benches, evaluation, derivative_check, oracle);
criterion_main!(benches);
