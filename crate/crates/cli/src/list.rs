use bilevel_core::{records, Function, Label, ProblemRecord};
use clap::Args;

use crate::runs::{show, Outcome};
use crate::Fail;

#[derive(Args)]
pub(crate) struct ListArgs {
    /// Label filter such as g=O or F=N (repeatable, all must hold)
    #[arg(long = "labels", value_name = "KEY=LABEL")]
    labels: Vec<String>,
    /// Dimension filter such as n_G=0 (repeatable)
    #[arg(long = "dims", value_name = "KEY=N")]
    dims: Vec<String>,
    /// Only problems whose equalities were split into inequalities
    #[arg(long)]
    equality_origin: bool,
    /// Only problems flagged nonsmooth
    #[arg(long)]
    nonsmooth: bool,
    /// Print names only
    #[arg(long)]
    names: bool,
}

type Filter = Box<dyn Fn(&ProblemRecord) -> bool>;

fn label_filter(spec: &str) -> Result<Filter, Fail> {
    let bad = || Fail::Usage(format!("`{spec}` is not KEY=LABEL with KEY in F,G,f,g and LABEL in N,L,O"));
    let (k, v) = spec.split_once('=').ok_or_else(bad)?;
    let func: Function = k.parse().map_err(|_| bad())?;
    let label = match v {
        "N" => Label::N,
        "L" => Label::L,
        "O" => Label::O,
        _ => return Err(bad()),
    };
    Ok(Box::new(move |r| r.labels.get(func) == label))
}

fn dim_filter(spec: &str) -> Result<Filter, Fail> {
    let bad = || Fail::Usage(format!("`{spec}` is not KEY=N with KEY in n_x,n_y,n_G,n_g"));
    let (k, v) = spec.split_once('=').ok_or_else(bad)?;
    let n: usize = v.parse().map_err(|_| bad())?;
    let get: fn(&ProblemRecord) -> usize = match k {
        "n_x" => |r| r.dims.n_x,
        "n_y" => |r| r.dims.n_y,
        "n_G" => |r| r.dims.n_upper,
        "n_g" => |r| r.dims.n_lower,
        _ => return Err(bad()),
    };
    Ok(Box::new(move |r| get(r) == n))
}

pub(crate) fn run(args: &ListArgs) -> Result<Outcome, Fail> {
    let mut filters: Vec<Filter> = Vec::new();
    for s in &args.labels {
        filters.push(label_filter(s)?);
    }
    for s in &args.dims {
        filters.push(dim_filter(s)?);
    }
    if args.equality_origin {
        filters.push(Box::new(|r| r.flags.has_equality_origin));
    }
    if args.nonsmooth {
        filters.push(Box::new(|r| r.flags.nonsmooth));
    }
    let rows: Vec<&ProblemRecord> = records().filter(|r| filters.iter().all(|f| f(r))).collect();
    if args.names {
        for r in rows {
            outln!("{}", r.name);
        }
        return Ok(Outcome::Success);
    }
    let table: Vec<[String; 9]> = rows
        .iter()
        .map(|r| {
            [
                r.name.clone(),
                r.labels.to_string(),
                r.dims.n_x.to_string(),
                r.dims.n_y.to_string(),
                r.dims.n_upper.to_string(),
                r.dims.n_lower.to_string(),
                show(r.claimed_upper),
                show(r.claimed_lower),
                r.source.clone(),
            ]
        })
        .collect();
    let head = ["name", "labels", "n_x", "n_y", "n_G", "n_g", "F*", "f*", "source"];
    let mut width: Vec<usize> = head.iter().map(|h| h.len()).collect();
    for row in &table {
        for (w, c) in width.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let print = |cells: Vec<&str>| {
        let line: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
        outln!("{}", line.join("  ").trim_end());
    };
    print(head.to_vec());
    for row in &table {
        print(row.iter().map(String::as_str).collect());
    }
    Ok(Outcome::Success)
}
