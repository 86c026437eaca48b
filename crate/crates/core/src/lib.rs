//! Nonlinear bilevel test problems with analytic first and second
//! derivatives, plus tooling to check derivatives, validate reported
//! solutions and run a simple nested baseline solver.

// Stored points are printed literature values; some happen to round to named constants.
#[allow(clippy::approx_constant)]
mod catalog;
pub mod derivcheck;
pub mod error;
pub mod jet;
pub mod manifest;
pub mod model;
pub mod mpcc;
pub mod oracle;
pub mod registry;
pub mod report;
mod search;
pub mod solver;
pub mod tensor;
pub mod validation;

pub use error::{Error, Result};
pub use model::{
    evaluate, shape_of, Derivative, Dimensions, EvalSelector, Evaluator, Function, Interval, Params, Point,
    ProblemDefinition, Smoothness,
};
pub use registry::{
    instantiate, list, lookup, param_specs, record, records, KnownSolution, Label, Labels, ParamSpec, ProblemRecord,
    SolutionStatus,
};
pub use tensor::Tensor;
pub use search::nnls;
