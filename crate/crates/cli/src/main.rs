//! `bilevel`: list, evaluate, verify and solve the bilevel test problems.

/// `print!`/`println!` that tolerate a closed stdout, so `bilevel list | head`
/// ends quietly instead of panicking.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}
macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

mod list;
mod runs;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bilevel_core::derivcheck::FdConfig;
use bilevel_core::manifest::Manifest;
use bilevel_core::mpcc::{build_mpcc, MpccPoint};
use bilevel_core::oracle::OracleConfig;
use bilevel_core::registry::instantiate_with_record;
use bilevel_core::report::RunReport;
use bilevel_core::solver::SolveConfig;
use bilevel_core::validation::{kkt_fit, Tolerances};
use bilevel_core::{Derivative, EvalSelector, Function, Point};
use clap::{Args, Parser, Subcommand};

use crate::runs::{DerivRun, Outcome, SolveRun, ValidateRun};

#[derive(Parser)]
#[command(name = "bilevel", version)]
#[command(about = "Nonlinear bilevel test problems: evaluation, verification and a baseline solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List registered problems
    List(list::ListArgs),
    /// Evaluate one function or derivative at a point
    Eval {
        name: String,
        /// Upper-level variables, space separated
        #[arg(long, num_args = 1.., allow_negative_numbers = true, required = true)]
        x: Vec<String>,
        /// Lower-level variables, space separated
        #[arg(long, num_args = 1.., allow_negative_numbers = true, required = true)]
        y: Vec<String>,
        /// One of F, G, f, g
        #[arg(long)]
        func: String,
        /// One of x, y, xx, xy, yy; omit for the value
        #[arg(long, default_value = "")]
        deriv: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Compare analytic derivatives against central differences
    CheckDerivatives {
        #[command(flatten)]
        sel: Selection,
        #[arg(long, default_value_t = FdConfig::default().seed)]
        seed: u64,
        /// Relative tolerance
        #[arg(long, default_value_t = FdConfig::default().rel_tol)]
        tol: f64,
        /// Absolute floor; defaults to the default ratio to --tol
        #[arg(long)]
        abs_tol: Option<f64>,
        /// Points checked per problem
        #[arg(long, default_value_t = FdConfig::default().samples)]
        samples: usize,
        /// Relative difference step
        #[arg(long, default_value_t = FdConfig::default().eps)]
        eps: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Check stored solutions for feasibility and lower-level optimality
    ValidateSolutions {
        #[command(flatten)]
        sel: Selection,
        /// Oracle seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Feasibility tolerance
        #[arg(long, default_value_t = Tolerances::default().feasibility)]
        tol: f64,
        /// Lower-level optimality gap tolerance
        #[arg(long, default_value_t = Tolerances::default().gap)]
        gap: f64,
        /// Relative tolerance for claimed objective values
        #[arg(long, default_value_t = Tolerances::default().value_rel)]
        value_rel: f64,
        /// Oracle multistarts
        #[arg(long, default_value_t = OracleConfig::default().multistarts)]
        samples: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Run the nested multistart baseline solver
    Solve {
        /// Problems to solve (or use --only)
        names: Vec<String>,
        #[command(flatten)]
        sel: Selection,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of starts
        #[arg(long, default_value_t = SolveConfig::default().multistarts)]
        samples: usize,
        /// Outer evaluations shared by all starts
        #[arg(long, default_value_t = SolveConfig::default().budget)]
        budget: usize,
        /// Outer evaluations of the final refinement
        #[arg(long, default_value_t = SolveConfig::default().polish)]
        polish: usize,
        /// Feasibility tolerance of the returned point
        #[arg(long, default_value_t = SolveConfig::default().feas_tol)]
        tol: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Write the registry metadata as versioned JSON ("-" for stdout)
    ExportManifest { path: PathBuf },
    /// Plain-text dump of the KKT reformulation at a point
    MpccDump {
        name: String,
        #[arg(long, num_args = 1.., allow_negative_numbers = true, required = true)]
        x: Vec<String>,
        #[arg(long, num_args = 1.., allow_negative_numbers = true, required = true)]
        y: Vec<String>,
        /// Multipliers; fitted on the active set when omitted
        #[arg(long, num_args = 1.., allow_negative_numbers = true)]
        lambda: Vec<String>,
        #[command(flatten)]
        params: ParamArgs,
    },
}

#[derive(Args, Clone, Default)]
struct ParamArgs {
    /// Parameter override, e.g. rho=2 (repeatable)
    #[arg(long = "params", value_name = "K=V")]
    params: Vec<String>,
}

#[derive(Args, Clone, Default)]
pub(crate) struct Selection {
    /// Restrict to these problems (comma or space separated; empty selects none)
    #[arg(long, num_args = 0..)]
    only: Option<Vec<String>>,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Args, Clone)]
struct OutArgs {
    /// Directory for the JSONL report and CSV summary
    #[arg(long, env = "BILEVEL_REPORT_DIR", default_value = "reports")]
    out_dir: PathBuf,
    /// Rerun with the configuration recorded in an earlier report
    #[arg(long)]
    from_report: Option<PathBuf>,
}

/// Failure classes mapped onto the exit-code contract.
#[derive(Debug)]
pub(crate) enum Fail {
    /// Bad arguments, unknown names, unreadable files: exit 2.
    Usage(String),
}

impl From<bilevel_core::Error> for Fail {
    fn from(e: bilevel_core::Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

fn vector(parts: &[String]) -> Result<Vec<f64>, Fail> {
    parts
        .iter()
        .flat_map(|p| p.split_whitespace())
        .map(|t| t.parse::<f64>().map_err(|_| Fail::Usage(format!("`{t}` is not a number"))))
        .collect()
}

fn load_config<T: serde::de::DeserializeOwned>(path: &Path, kind: bilevel_core::report::RunKind) -> Result<T, Fail> {
    let text = std::fs::read_to_string(path).map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))?;
    let rep = RunReport::from_jsonl(&text)?;
    if rep.kind != kind {
        return Err(Fail::Usage(format!(
            "{} is a {} report, expected {}",
            path.display(),
            rep.kind.as_str(),
            kind.as_str()
        )));
    }
    serde_json::from_value(rep.config).map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<Outcome, Fail> {
    use bilevel_core::report::RunKind;
    match cli.command {
        Command::List(args) => list::run(&args),
        Command::Eval {
            name,
            x,
            y,
            func,
            deriv,
            params,
        } => {
            let overrides = runs::parse_params(&params.params)?;
            let (p, _) = instantiate_with_record(&name, &overrides)?;
            let sel = EvalSelector::new(func.parse::<Function>()?, deriv.parse::<Derivative>()?);
            let t = p.evaluate(&Point::new(vector(&x)?, vector(&y)?), sel)?;
            outln!("{t}");
            Ok(Outcome::Success)
        }
        Command::CheckDerivatives {
            sel,
            seed,
            tol,
            abs_tol,
            samples,
            eps,
            out,
        } => {
            let cfg = match &out.from_report {
                Some(path) => load_config(path, RunKind::Derivcheck)?,
                None => DerivRun {
                    fd: FdConfig {
                        eps,
                        rel_tol: tol,
                        abs_tol: abs_tol.unwrap_or(tol * FdConfig::default().abs_tol / FdConfig::default().rel_tol),
                        samples,
                        seed,
                    },
                    only: runs::split_names(sel.only.as_deref()),
                    params: runs::parse_params(&sel.params.params)?,
                },
            };
            cfg.execute(&out.out_dir)
        }
        Command::ValidateSolutions {
            sel,
            seed,
            tol,
            gap,
            value_rel,
            samples,
            out,
        } => {
            let cfg = match &out.from_report {
                Some(path) => load_config(path, RunKind::Validate)?,
                None => ValidateRun {
                    tolerances: Tolerances {
                        feasibility: tol,
                        gap,
                        value_rel,
                        ..Tolerances::default()
                    },
                    oracle: OracleConfig {
                        seed,
                        multistarts: samples,
                        ..OracleConfig::default()
                    },
                    only: runs::split_names(sel.only.as_deref()),
                    params: runs::parse_params(&sel.params.params)?,
                },
            };
            cfg.execute(&out.out_dir)
        }
        Command::Solve {
            names,
            sel,
            seed,
            samples,
            budget,
            polish,
            tol,
            out,
        } => {
            let cfg = match &out.from_report {
                Some(path) => load_config(path, RunKind::Solve)?,
                None => {
                    let mut problems = names;
                    problems.extend(runs::split_names(sel.only.as_deref()).unwrap_or_default());
                    if problems.is_empty() {
                        return Err(Fail::Usage("solve needs at least one problem name".into()));
                    }
                    SolveRun {
                        solve: SolveConfig {
                            multistarts: samples,
                            seed,
                            budget,
                            polish,
                            feas_tol: tol,
                            ..SolveConfig::default()
                        },
                        problems,
                        params: runs::parse_params(&sel.params.params)?,
                    }
                }
            };
            cfg.execute(&out.out_dir)
        }
        Command::ExportManifest { path } => {
            let m = Manifest::from_registry();
            if path.as_os_str() == "-" {
                out!("{}", m.to_json());
            } else {
                m.write(&path).map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))?;
                eprintln!("wrote {} problems to {}", m.problems.len(), path.display());
            }
            Ok(Outcome::Success)
        }
        Command::MpccDump {
            name,
            x,
            y,
            lambda,
            params,
        } => {
            let overrides = runs::parse_params(&params.params)?;
            let (p, _) = instantiate_with_record(&name, &overrides)?;
            let model = build_mpcc(&p)?;
            let point = Point::new(vector(&x)?, vector(&y)?);
            let lambda = if lambda.is_empty() {
                kkt_fit(&p, &point, Tolerances::default().active)?.multipliers
            } else {
                vector(&lambda)?
            };
            out!("{}", model.dump(&name, &MpccPoint::new(point, lambda))?);
            Ok(Outcome::Success)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Failures) => ExitCode::from(1),
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
