//! `intertwine`: spectra of conformal intertwinors on S^{p-1}×S^{q-1}.

mod eval;

use std::fs::File;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use intertwine::report::{write_records, Format};
use intertwine::spectra::{ktype_exists, BundleParams, KTypeFamily, KTypeLabel};
use intertwine::torus::{residual_sweep, BasisConvention};
use intertwine::verify::{self, CheckReport, GridSpec, Standard, Status};
use intertwine::Execution;
use serde::Serialize;

use eval::{evaluate, Mode, Operator, Order, Point, ValueRecord};

#[derive(Parser)]
#[command(name = "intertwine", version, about = "Exact spectra of conformal intertwinors on form bundles over products of spheres")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one spectral point.
    Eval(EvalArgs),
    /// Tabulate values over a grid.
    Table(TableArgs),
    /// Run the consistency suites; exit status 0 iff nothing fails.
    Verify(VerifyArgs),
    /// Intertwining residuals on the truncated torus.
    Torus(TorusArgs),
}

#[derive(Args)]
struct OutputArgs {
    /// csv or jsonl
    #[arg(long, default_value = "csv", value_parser = parse_format)]
    format: Format,
    /// Output file; standard output when absent.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    p: i64,
    #[arg(long)]
    q: i64,
    #[arg(long)]
    k: i64,
    #[arg(long)]
    a: i64,
    #[arg(long)]
    jp: i64,
    #[arg(long)]
    j: i64,
    #[arg(long, allow_hyphen_values = true)]
    r: String,
    /// m1-delta, m1-d or m2
    #[arg(long, value_parser = parse_family)]
    family: KTypeFamily,
    #[arg(long, value_enum, default_value = "exact")]
    mode: Mode,
    #[arg(long, value_enum, default_value = "a")]
    operator: Operator,
    #[command(flatten)]
    out: OutputArgs,
}

/// Inclusive ranges are written `a..b`; a single number is a one-point range.
#[derive(Args)]
struct GridArgs {
    #[arg(long, default_value = "2..7", value_parser = parse_range)]
    p: RangeInclusive<i64>,
    #[arg(long, default_value = "2..7", value_parser = parse_range)]
    q: RangeInclusive<i64>,
    #[arg(long, default_value = "0..6", value_parser = parse_range)]
    k: RangeInclusive<i64>,
    #[arg(long, default_value = "0..6", value_parser = parse_range)]
    a: RangeInclusive<i64>,
    #[arg(long, default_value = "0..8", value_parser = parse_range)]
    jp: RangeInclusive<i64>,
    #[arg(long, default_value = "0..8", value_parser = parse_range)]
    j: RangeInclusive<i64>,
    #[arg(long, default_value = "0..4", value_parser = parse_range, allow_hyphen_values = true)]
    r: RangeInclusive<i64>,
    /// Run single-threaded.
    #[arg(long)]
    sequential: bool,
}

impl GridArgs {
    fn spec(&self) -> GridSpec {
        GridSpec {
            p: self.p.clone(),
            q: self.q.clone(),
            k: self.k.clone(),
            a: self.a.clone(),
            jp: self.jp.clone(),
            j: self.j.clone(),
            r: self.r.clone(),
            ..GridSpec::default()
        }
    }

    fn exec(&self) -> Execution {
        if self.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        }
    }
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    grid: GridArgs,
    /// Restrict to one family; all three by default.
    #[arg(long, value_parser = parse_family)]
    family: Option<KTypeFamily>,
    #[arg(long, value_enum, default_value = "exact")]
    mode: Mode,
    #[arg(long, value_enum, default_value = "a")]
    operator: Operator,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Suite {
    All,
    Diamond,
    Interface,
    Det,
    D2rk,
    Scalar,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, value_enum, default_value = "all")]
    suite: Suite,
    /// Write only failing records.
    #[arg(long)]
    failures_only: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct TorusArgs {
    /// Form degrees, comma separated.
    #[arg(long, default_value = "0,1,2", value_delimiter = ',')]
    k: Vec<u8>,
    /// Orders r, comma separated.
    #[arg(long, default_value = "1,2,3", value_delimiter = ',', allow_hyphen_values = true)]
    r: Vec<i64>,
    /// Fourier truncation |j'|, |j| ≤ M.
    #[arg(long = "M", default_value_t = 24)]
    m: i64,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// standard or reflected
    #[arg(long, default_value = "standard", value_parser = parse_convention)]
    convention: BasisConvention,
    #[arg(long)]
    sequential: bool,
    #[command(flatten)]
    out: OutputArgs,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: intertwine::Error| e.to_string())
}

fn parse_family(s: &str) -> Result<KTypeFamily, String> {
    s.parse().map_err(|e: intertwine::Error| e.to_string())
}

fn parse_convention(s: &str) -> Result<BasisConvention, String> {
    s.parse().map_err(|e: intertwine::Error| e.to_string())
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let num = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("'{s}' is not a range a..b"));
    match s.split_once("..") {
        Some((lo, hi)) => Ok(num(lo)?..=num(hi.strip_prefix('=').unwrap_or(hi))?),
        None => num(s).map(|v| v..=v),
    }
}

fn sink(out: &OutputArgs) -> Result<Box<dyn Write>> {
    Ok(match &out.output {
        Some(path) => Box::new(File::create(path).with_context(|| format!("cannot create {}", path.display()))?),
        None => Box::new(io::stdout().lock()),
    })
}

fn emit<R: Serialize>(out: &OutputArgs, records: &[R]) -> Result<()> {
    write_records(sink(out)?, records, out.format).context("writing records")
}

fn cmd_eval(args: &EvalArgs) -> Result<ExitCode> {
    let point = Point {
        params: BundleParams::new(args.p, args.q, args.k, args.a)?,
        family: args.family,
        jp: args.jp,
        j: args.j,
        r: Order::parse(&args.r, args.mode)?,
        mode: args.mode,
        operator: args.operator,
    };
    emit(&args.out, &[evaluate(&point)?])?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(args: &TableArgs) -> Result<ExitCode> {
    let grid = args.grid.spec();
    let families: Vec<KTypeFamily> = match args.family {
        Some(f) => vec![f],
        None => KTypeFamily::ALL.to_vec(),
    };
    let rows = args.grid.exec().flat_map(grid.params(), |params| {
        let mut rows = Vec::new();
        for &family in &families {
            for jp in grid.jp.clone() {
                for j in grid.j.clone() {
                    if jp < 0 || j < 0 || !ktype_exists(&params, &KTypeLabel::new(family, jp, j)) {
                        continue;
                    }
                    for r in grid.r.clone() {
                        let point = Point { params, family, jp, j, r: Order::Int(r), mode: args.mode, operator: args.operator };
                        rows.push(evaluate(&point).unwrap_or_else(|e| failed_row(&point, e)));
                    }
                }
            }
        }
        rows
    });
    emit(&args.out, &rows)?;
    Ok(ExitCode::SUCCESS)
}

/// A row whose value is undefined; the reason goes in `note`.
fn failed_row(pt: &Point, e: anyhow::Error) -> ValueRecord {
    ValueRecord { note: e.to_string(), ..eval::header(pt) }
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode> {
    let grid = args.grid.spec();
    grid.validate()?;
    let exec = args.grid.exec();
    let m = &Standard;
    let reports: Vec<CheckReport> = match args.suite {
        Suite::All => verify::run_all(&grid, exec),
        Suite::Diamond => vec![verify::run_diamond_checks_with(m, &grid, exec)],
        Suite::Interface => vec![verify::run_interface_checks_with(m, &grid, exec)],
        Suite::Det => vec![verify::run_det_checks_with(m, &grid, exec)],
        Suite::D2rk => vec![verify::run_d2rk_checks_with(m, &grid, exec)],
        Suite::Scalar => vec![verify::run_scalar_reduction_with(m, &grid, exec)],
    };
    let records: Vec<_> = reports
        .iter()
        .flat_map(|r| r.records.iter())
        .filter(|r| !args.failures_only || r.status == Status::Fail)
        .collect();
    emit(&args.out, &records)?;
    let mut failed = false;
    for r in &reports {
        let s = r.summary();
        failed |= s.fail > 0;
        eprintln!("{}: pass={} fail={} skipped-degenerate={} identities={}", r.suite, s.pass, s.fail, s.skipped_degenerate, s.identities);
    }
    Ok(if failed { ExitCode::FAILURE } else { ExitCode::SUCCESS })
}

fn cmd_torus(args: &TorusArgs) -> Result<ExitCode> {
    if args.k.is_empty() || args.r.is_empty() {
        bail!("need at least one k and one r");
    }
    let exec = if args.sequential { Execution::Sequential } else { Execution::Parallel };
    let reports = residual_sweep(args.m, &args.k, &args.r, args.convention, args.tol, exec)?;
    emit(&args.out, &reports)?;
    let ok = reports.iter().all(|r| r.status == Status::Pass);
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Table(a) => cmd_table(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Torus(a) => cmd_torus(a),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(2)
    })
}
