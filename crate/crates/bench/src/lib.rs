//! Shared fixtures for the benchmarks.

use bilevel_core::derivcheck::{problem_rng, sample_point};
use bilevel_core::{lookup, Point, ProblemDefinition};

/// Problems spanning small, medium and ten-dimensional lower levels.
pub const REPRESENTATIVE: [&str; 4] = ["ShimizuEtal1997a", "AiyoshiShimizu1984Ex2", "MitsosBarton2006Ex328", "SinhaMaloDeb2014TP9"];

/// The problem with a seeded in-box point.
pub fn fixture(name: &str) -> (ProblemDefinition, Point) {
    let (p, _) = lookup(name).expect("registered problem");
    let mut rng = problem_rng(1, name);
    let pt = sample_point(&mut rng, &p.sampling_box(), p.dims().n_x, 1e-6);
    (p, pt)
}
