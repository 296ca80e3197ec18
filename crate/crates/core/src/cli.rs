//! Command-line front end.
//!
//! Exit codes: 0 when every checked statement holds, 1 when a checked
//! mathematical statement fails, 2 for usage errors.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::identities::{check_all_identities, check_wronskian_positive, WRONSKIAN_POSITIVE};
use crate::jacobi::{default_slopes, jacobi_on_ray, FamilyParams};
use crate::numeric::{eval_jacobi_float, linear_grid, sweep_delta, EvalMode, EvalRequest};
use crate::rational::{format_rational, parse_rational, to_f64, Rational};
use crate::report::{write_sweep_csv, CheckResult, ConfigEcho, Parameters, Report, Status};
use crate::turan::{certify_theorem, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const THEOREM_CHECK: &str = "delta-negative-right-of-one";

#[derive(Debug, Parser)]
#[command(name = "jacobi-turan", version, about = "Exact Jacobi polynomial toolkit on the ray alpha = a n, beta = b n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate P_n^(an,bn)(x)
    Eval(EvalArgs),
    /// Print the exact coefficients of P_n^(an,bn), ascending degree
    Poly(PolyArgs),
    /// Check the recurrence identities and Wronskian positivity
    VerifyIdentities(GridArgs),
    /// Certify Delta_n(x) < 0 for x > 1 by Sturm root counting
    Certify(GridArgs),
    /// Sample Delta_n in binary64 over a grid of x and write CSV
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_parser = parse_slope)]
    pub a: Rational,
    #[arg(long, value_parser = parse_slope)]
    pub b: Rational,
    /// Rational "p/q" (exact) or decimal
    #[arg(long)]
    pub x: String,
    /// Evaluate in binary64 instead of exactly
    #[arg(long)]
    pub float: bool,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_parser = parse_slope)]
    pub a: Rational,
    #[arg(long, value_parser = parse_slope)]
    pub b: Rational,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Largest degree index; defaults to 8 for verify-identities, 6 for certify
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n_max: Option<u32>,
    /// Slope of alpha; repeatable. Default grid: 0, 1/2, 1, 2, 5/2
    #[arg(long, value_parser = parse_slope)]
    pub a: Vec<Rational>,
    /// Slope of beta; repeatable. Default grid: 0, 1/2, 1, 2, 5/2
    #[arg(long, value_parser = parse_slope)]
    pub b: Vec<Rational>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n_max: u32,
    #[arg(long, value_parser = parse_slope)]
    pub a: Vec<Rational>,
    #[arg(long, value_parser = parse_slope)]
    pub b: Vec<Rational>,
    /// "start:stop:step" in binary64, stop inclusive
    #[arg(long, value_parser = parse_grid, allow_hyphen_values = true)]
    pub x_grid: XGrid,
    #[arg(long, value_enum, default_value = "direct-sum")]
    pub mode: ModeArg,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    DirectSum,
    HornerOnExact,
}

fn parse_slope(s: &str) -> Result<Rational, String> {
    let r = parse_rational(s).map_err(|e| e.to_string())?;
    if r < Rational::from_integer(0.into()) {
        return Err(format!("slope must be nonnegative, got {s}"));
    }
    Ok(r)
}

/// Points of an `--x-grid` spec.
#[derive(Debug, Clone, PartialEq)]
pub struct XGrid(pub Vec<f64>);

fn parse_grid(s: &str) -> Result<XGrid, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [start, stop, step] = parts.as_slice() else {
        return Err(format!("expected start:stop:step, got {s:?}"));
    };
    let num = |v: &str| v.trim().parse::<f64>().map_err(|e| format!("{v:?}: {e}"));
    linear_grid(num(start)?, num(stop)?, num(step)?)
        .map(XGrid)
        .map_err(|e| e.to_string())
}

fn slope_grid(a: &[Rational], b: &[Rational]) -> Vec<FamilyParams> {
    let or_default = |v: &[Rational]| if v.is_empty() { default_slopes() } else { v.to_vec() };
    let (a, b) = (or_default(a), or_default(b));
    a.iter()
        .flat_map(|a| b.iter().map(move |b| FamilyParams::new(a.clone(), b.clone())))
        .collect::<Result<_, _>>()
        .expect("slopes validated as nonnegative while parsing")
}

fn usage_error(msg: impl std::fmt::Display) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    execute(cli.command, &mut out)
}

/// Runs a parsed command, writing primary output to `out` unless an
/// `--output` path is given.
pub fn execute(command: Command, out: &mut dyn Write) -> i32 {
    match command {
        Command::Eval(args) => cmd_eval(&args, out),
        Command::Poly(args) => cmd_poly(&args, out),
        Command::VerifyIdentities(args) => cmd_verify_identities(&args, out),
        Command::Certify(args) => cmd_certify(&args, out),
        Command::Sweep(args) => cmd_sweep(&args, out),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> i32 {
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Ok(()) => EXIT_OK,
        Err(e) => usage_error(format!("cannot write output: {e}")),
    }
}

pub fn cmd_eval(args: &EvalArgs, out: &mut dyn Write) -> i32 {
    if args.float {
        let x: f64 = match args.x.trim().parse() {
            Ok(x) => x,
            Err(_) => match parse_rational(&args.x) {
                Ok(r) => to_f64(&r),
                Err(e) => return usage_error(e),
            },
        };
        let n = args.n as f64;
        return match eval_jacobi_float(args.n, to_f64(&args.a) * n, to_f64(&args.b) * n, x) {
            Ok(v) => emit(out, &format!("{v}\n")),
            Err(e) => usage_error(e),
        };
    }
    let x = match parse_rational(&args.x) {
        Ok(x) => x,
        Err(e) => return usage_error(e),
    };
    let fam = FamilyParams::new(args.a.clone(), args.b.clone()).expect("validated slopes");
    let value = jacobi_on_ray(args.n, &fam).eval(&x);
    emit(out, &format!("{}\n", format_rational(&value)))
}

pub fn cmd_poly(args: &PolyArgs, out: &mut dyn Write) -> i32 {
    let fam = FamilyParams::new(args.a.clone(), args.b.clone()).expect("validated slopes");
    let p = jacobi_on_ray(args.n, &fam);
    match args.format {
        Format::Text => emit(out, &format!("{p}\n")),
        Format::Json => {
            let doc = serde_json::json!({
                "n": args.n,
                "a": format_rational(&args.a),
                "b": format_rational(&args.b),
                "coeffs": p.to_strings(),
            });
            emit(out, &format!("{doc}\n"))
        }
        Format::Csv => usage_error("poly supports --format text or json"),
    }
}

fn config_echo(command: &str, n_max: u32, args: &GridArgs) -> ConfigEcho {
    let fmt = |v: &[Rational]| v.iter().map(format_rational).collect();
    ConfigEcho {
        command: command.to_string(),
        n_max,
        a: fmt(&args.a),
        b: fmt(&args.b),
    }
}

fn grid_cells(n_max: u32, args: &GridArgs) -> Vec<(u32, FamilyParams)> {
    let fams = slope_grid(&args.a, &args.b);
    (1..=n_max)
        .flat_map(|n| fams.iter().map(move |f| (n, f.clone())))
        .collect()
}

fn params(n: u32, fam: &FamilyParams) -> Parameters {
    Parameters {
        n,
        a: format_rational(fam.a()),
        b: format_rational(fam.b()),
    }
}

fn finish_report(report: Report, args: &GridArgs, out: &mut dyn Write) -> i32 {
    let text = match args.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
        Format::Csv => return usage_error("reports support --format text or json"),
    };
    let status = match &args.output {
        Some(path) => match File::create(path).and_then(|mut f| f.write_all(text.as_bytes())) {
            Ok(()) => EXIT_OK,
            Err(e) => usage_error(format!("cannot write {}: {e}", path.display())),
        },
        None => emit(out, &text),
    };
    if status != EXIT_OK {
        status
    } else if report.all_pass() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

pub fn cmd_verify_identities(args: &GridArgs, out: &mut dyn Write) -> i32 {
    let n_max = args.n_max.unwrap_or(8);
    let cells = grid_cells(n_max, args);
    let results: Result<Vec<Vec<CheckResult>>, _> = cells
        .par_iter()
        .map(|(n, fam)| {
            let mut rows: Vec<CheckResult> = check_all_identities(*n, fam)?
                .iter()
                .map(CheckResult::from_identity)
                .collect();
            rows.push(CheckResult::from_certificate(
                WRONSKIAN_POSITIVE,
                params(*n, fam),
                check_wronskian_positive(*n, fam)?,
                Verdict::CertifiedPositive,
                Status::Fail,
            ));
            Ok::<_, crate::Error>(rows)
        })
        .collect();
    let results = match results {
        Ok(r) => r.into_iter().flatten().collect(),
        Err(e) => return usage_error(e),
    };
    let report = Report::new(config_echo("verify-identities", n_max, args), results);
    finish_report(report, args, out)
}

pub fn cmd_certify(args: &GridArgs, out: &mut dyn Write) -> i32 {
    let n_max = args.n_max.unwrap_or(6);
    let cells = grid_cells(n_max, args);
    let results: Result<Vec<CheckResult>, _> = cells
        .par_iter()
        .map(|(n, fam)| {
            Ok::<_, crate::Error>(CheckResult::from_certificate(
                THEOREM_CHECK,
                params(*n, fam),
                certify_theorem(*n, fam)?,
                Verdict::CertifiedNegative,
                Status::NotCertified,
            ))
        })
        .collect();
    let results = match results {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };
    let report = Report::new(config_echo("certify", n_max, args), results);
    finish_report(report, args, out)
}

pub fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write) -> i32 {
    if args.format != Format::Csv {
        return usage_error("sweep writes --format csv only");
    }
    let x_grid = &args.x_grid.0;
    let mode = match args.mode {
        ModeArg::DirectSum => EvalMode::DirectSum,
        ModeArg::HornerOnExact => EvalMode::HornerOnExact,
    };
    let mut rows = Vec::new();
    for fam in slope_grid(&args.a, &args.b) {
        let req = EvalRequest {
            n_values: (1..=args.n_max).collect(),
            fam,
            x_grid: x_grid.clone(),
            mode,
        };
        match sweep_delta(&req) {
            Ok(r) => rows.extend(r),
            Err(e) => return usage_error(e),
        }
    }
    let written = match &args.output {
        Some(path) => File::create(path)
            .map_err(csv::Error::from)
            .and_then(|f| write_sweep_csv(&rows, BufWriter::new(f))),
        None => write_sweep_csv(&rows, &mut *out),
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => usage_error(format!("cannot write sweep output: {e}")),
    }
}
