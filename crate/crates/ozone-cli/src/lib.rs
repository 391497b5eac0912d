//! Command-line front end for the ring classifier: single-ring reports,
//! grid scans producing classification tables, center presentations, and
//! brute-force verification runs.
//!
//! Exit codes: `0` success, `1` a verification law failed, `2` unparseable
//! or invalid input, `3` an enumeration budget was exceeded.

pub mod render;
pub mod scan;
pub mod verify;

use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::Args;
use serde::{Deserialize, Serialize};

use ozone_core::{
    center_presentation, classification_report, expand_series, parse_inline_matrix, parse_input,
    CenterPresentation, Classification, Crosscheck, Error, ExponentWord, InvariantProfile,
    RationalSeries, SkewParams,
};

pub const EXIT_LAW_FAILURE: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_BUDGET_EXCEEDED: i32 = 3;

/// Terminal failure of a subcommand: an exit code plus the diagnostic that
/// goes to standard error.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

/// Validation and parse problems exit with `2`; exhausted budgets with `3`.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded { .. } => EXIT_BUDGET_EXCEEDED,
        _ => EXIT_INVALID_INPUT,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: exit_code_for(&e), message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_INVALID_INPUT, message: format!("Parse: {e}") }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure { code: EXIT_INVALID_INPUT, message: format!("Parse: {e}") }
    }
}

/// Where the ring parameters come from: a file (or `-` for standard input),
/// or an inline `--ell`/`--b` pair.
#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    /// Parameter file, JSON or text format; "-" reads standard input
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Root-of-unity order, for inline input
    #[arg(long, allow_hyphen_values = true)]
    pub ell: Option<i64>,
    /// Inline matrix: rows separated by ';', entries by ',' or spaces
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
}

pub fn resolve_params(args: &InputArgs) -> Result<SkewParams, Failure> {
    match (&args.input, args.ell, &args.b) {
        (Some(path), None, None) => {
            let text = if path.as_os_str() == "-" {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf)?;
                buf
            } else {
                fs::read_to_string(path).map_err(|e| Failure {
                    code: EXIT_INVALID_INPUT,
                    message: format!("Parse: cannot read {}: {e}", path.display()),
                })?
            };
            Ok(parse_input(&text)?)
        }
        (None, Some(ell), Some(b)) => {
            let rows = parse_inline_matrix(b)?;
            Ok(SkewParams::new(ell, rows)?)
        }
        _ => Err(Failure {
            code: EXIT_INVALID_INPUT,
            message: "Parse: provide either --input FILE or both --ell N and --b \"row;row;...\""
                .into(),
        }),
    }
}

/// The matrix as one line: rows joined by ';', entries by ','.
pub fn matrix_inline(p: &SkewParams) -> String {
    p.b()
        .iter()
        .map(|row| row.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}

/// Full single-ring report as emitted by `ozone report`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub input: SkewParams,
    pub invariants: InvariantProfile,
    pub classification: Classification,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub center: Option<CenterPresentation>,
    pub crosschecks: Vec<Crosscheck>,
}

/// Center presentation as emitted by `ozone center`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CenterDocument {
    pub input: SkewParams,
    pub generators: Vec<ExponentWord>,
    pub series: RationalSeries,
    pub numerator_is_cyclotomic: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub expansion: Option<Vec<i64>>,
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Emit human-readable text instead of JSON
    #[arg(long)]
    pub pretty: bool,
    /// Skip the center presentation
    #[arg(long)]
    pub no_center: bool,
    /// Step budget for center enumeration
    #[arg(long, default_value_t = ozone_core::DEFAULT_CENTER_BUDGET as u64)]
    pub budget: u64,
}

pub fn cmd_report(args: &ReportArgs) -> Result<i32, Failure> {
    let p = resolve_params(&args.input)?;
    let report = classification_report(&p)?;
    let center = if args.no_center {
        None
    } else {
        Some(center_presentation(&p, args.budget as u128)?)
    };
    let doc = ReportDocument {
        input: report.params,
        invariants: report.invariants,
        classification: report.classification,
        center,
        crosschecks: report.crosschecks,
    };
    if args.pretty {
        print!("{}", render::report_text(&doc));
    } else {
        println!("{}", serde_json::to_string(&doc)?);
    }
    Ok(0)
}

#[derive(Args, Debug)]
pub struct CenterArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Emit human-readable text instead of JSON
    #[arg(long)]
    pub pretty: bool,
    /// Step budget for center enumeration
    #[arg(long, default_value_t = ozone_core::DEFAULT_CENTER_BUDGET as u64)]
    pub budget: u64,
    /// Also expand the series coefficients up to this degree
    #[arg(long)]
    pub degree_bound: Option<usize>,
}

pub fn cmd_center(args: &CenterArgs) -> Result<i32, Failure> {
    let p = resolve_params(&args.input)?;
    let c = center_presentation(&p, args.budget as u128)?;
    let expansion = match args.degree_bound {
        Some(bound) => Some(expand_series(&c.series, bound)?),
        None => None,
    };
    let doc = CenterDocument {
        input: p,
        generators: c.generators,
        series: c.series,
        numerator_is_cyclotomic: c.numerator_is_cyclotomic,
        expansion,
    };
    if args.pretty {
        print!("{}", render::center_text(&doc));
    } else {
        println!("{}", serde_json::to_string(&doc)?);
    }
    Ok(0)
}
