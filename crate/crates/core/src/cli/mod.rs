//! Command-line front end: `list`, `eval`, `verify` and `sweep`.

mod record;
mod values;

pub use record::{CsvRow, OutputRecord, Real};
pub use values::ValueList;

use std::io::{self, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::error::Error;
use crate::identities::{self, Case, Form, IdentityId, Params};
use crate::series::EvalConfig;

pub const DEFAULT_TOL: f64 = 1e-7;

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok = 0,
    Failed = 1,
    Domain = 2,
    NotConverged = 3,
}

impl Status {
    pub fn code(self) -> u8 {
        self as u8
    }
}

impl From<&Error> for Status {
    fn from(e: &Error) -> Self {
        match e {
            Error::Domain { .. }
            | Error::Pole { .. }
            | Error::JetMismatch(_)
            | Error::OrderOutOfRange { .. } => Status::Domain,
            Error::NonFiniteTerm { .. } | Error::NonMonotoneTail { .. } | Error::Divergent(_) => {
                Status::NotConverged
            }
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "eulersum", version, about = "Evaluate and verify variant Euler harmonic sums")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List identities whose name contains FILTER (case-insensitive).
    List { filter: Option<String> },
    /// Evaluate one identity at one parameter point.
    Eval {
        id: IdentityId,
        #[command(flatten)]
        point: Point,
        #[arg(long, value_enum, default_value_t = Side::Both)]
        side: Side,
        #[arg(long, default_value = "corrected")]
        form: Form,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Compare series and closed form; exit 0 only if every point passes.
    Verify {
        #[arg(long, conflicts_with = "ids")]
        all: bool,
        #[arg(required_unless_present = "all")]
        ids: Vec<IdentityId>,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, env = "EULER_SUM_TOL", default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value = "corrected")]
        form: Form,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Tabulate both sides over a parameter grid.
    Sweep {
        id: IdentityId,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, default_value = "corrected")]
        form: Form,
        #[arg(long, env = "EULER_SUM_TOL", default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[command(flatten)]
        oracle: OracleArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Lhs,
    Rhs,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct Point {
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<f64>,
    #[arg(long)]
    pub case: Option<Case>,
}

impl Point {
    fn params(&self) -> Params {
        Params { n: self.n, m: self.m, p: self.p, x: self.x, case: self.case }
    }
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    /// Values of n: `2`, `0,2,4` or inclusive `0..4`.
    #[arg(long)]
    pub n: Option<ValueList<u64>>,
    #[arg(long)]
    pub m: Option<ValueList<u32>>,
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<ValueList<f64>>,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<ValueList<f64>>,
    #[arg(long)]
    pub case: Option<Case>,
}

impl GridArgs {
    fn is_empty(&self) -> bool {
        self.n.is_none() && self.m.is_none() && self.p.is_none() && self.x.is_none() && self.case.is_none()
    }

    /// Cartesian product of the given lists in (case, x, p, n, m) order.
    pub fn points(&self) -> Vec<Params> {
        fn axis<T: Copy>(v: &Option<ValueList<T>>) -> Vec<Option<T>> {
            match v {
                Some(l) => l.0.iter().copied().map(Some).collect(),
                None => vec![None],
            }
        }
        let mut out = Vec::new();
        for x in axis(&self.x) {
            for p in axis(&self.p) {
                for n in axis(&self.n) {
                    for m in axis(&self.m) {
                        out.push(Params { n, m, p, x, case: self.case });
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    /// Relative tolerance at which the series oracle stops.
    #[arg(long, default_value_t = 1e-10)]
    pub oracle_tol: f64,
    /// Index after which the series tail is replaced by Euler-Maclaurin.
    #[arg(long, default_value_t = 10_000)]
    pub em_start: u64,
}

impl OracleArgs {
    fn config(&self) -> EvalConfig {
        EvalConfig { rel_tol: self.oracle_tol, em_start: self.em_start, ..EvalConfig::default() }
    }
}

/// Run a parsed command line, writing records to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<Status> {
    match cli.command {
        Command::List { filter } => cmd_list(filter.as_deref(), out),
        Command::Eval { id, point, side, form, oracle } => {
            cmd_eval(id, &point.params(), side, form, &oracle.config(), out, err)
        }
        Command::Verify { all, ids, grid, tol, form, jobs, oracle } => {
            let ids = if all { IdentityId::ALL.to_vec() } else { ids };
            cmd_verify(&ids, &grid, tol, form, jobs, &oracle.config(), out, err)
        }
        Command::Sweep { id, grid, format, form, tol, jobs, oracle } => {
            cmd_sweep(id, &grid, format, form, tol, jobs, &oracle.config(), out, err)
        }
    }
}

pub fn cmd_list(filter: Option<&str>, out: &mut dyn Write) -> io::Result<Status> {
    let needle = filter.unwrap_or("").to_ascii_uppercase();
    for id in IdentityId::ALL.into_iter().filter(|id| id.name().contains(&needle)) {
        writeln!(out, "{:<14} {:<14} {}", id.name(), id.signature(), id.series())?;
    }
    Ok(Status::Ok)
}

fn elapsed_ms(t: Instant) -> Real {
    Real(t.elapsed().as_secs_f64() * 1e3)
}

pub fn cmd_eval(
    id: IdentityId,
    params: &Params,
    side: Side,
    form: Form,
    cfg: &EvalConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<Status> {
    let start = Instant::now();
    let mut rec = OutputRecord::new("eval", id, params).with_form(form);
    let mut status = Status::Ok;
    let result = cfg.validate().and_then(|()| {
        if side != Side::Rhs {
            let lhs = identities::eval_lhs(id, params, cfg)?;
            if !lhs.converged {
                status = Status::NotConverged;
            }
            rec.set_lhs(&lhs);
        }
        if side != Side::Lhs {
            rec.set_rhs(identities::eval_rhs(id, params, form)?);
        }
        Ok(())
    });
    if let Err(e) = result {
        writeln!(err, "eulersum: {id} {params}: {e}")?;
        rec = rec.with_error(&e);
        status = Status::from(&e);
    }
    rec.wall_ms = elapsed_ms(start);
    writeln!(out, "{}", rec.to_line())?;
    Ok(status)
}

fn run_points(
    points: Vec<(IdentityId, Params)>,
    form: Form,
    tol: f64,
    jobs: usize,
    cfg: &EvalConfig,
    command: &str,
) -> Vec<(OutputRecord, Status)> {
    let one = |(id, params): &(IdentityId, Params)| {
        let start = Instant::now();
        let (mut rec, status) = match identities::verify_with(*id, params, form, tol, cfg) {
            Ok(r) => {
                let status = if r.pass {
                    Status::Ok
                } else if !r.lhs_converged {
                    Status::NotConverged
                } else {
                    Status::Failed
                };
                (OutputRecord::from_report(command, &r), status)
            }
            Err(e) => {
                let rec = OutputRecord::new(command, *id, params).with_form(form).with_error(&e);
                (rec, Status::from(&e))
            }
        };
        rec.wall_ms = elapsed_ms(start);
        (rec, status)
    };
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(|| points.par_iter().map(one).collect()),
        Err(_) => points.iter().map(one).collect(),
    }
}

fn validate_run(tol: f64, cfg: &EvalConfig, err: &mut dyn Write) -> io::Result<bool> {
    if let Err(e) = cfg.validate() {
        writeln!(err, "eulersum: {e}")?;
        return Ok(false);
    }
    if !(tol >= 0.0) {
        writeln!(err, "eulersum: tolerance must be non-negative, got {tol}")?;
        return Ok(false);
    }
    Ok(true)
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_verify(
    ids: &[IdentityId],
    grid: &GridArgs,
    tol: f64,
    form: Form,
    jobs: usize,
    cfg: &EvalConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<Status> {
    if !validate_run(tol, cfg, err)? {
        return Ok(Status::Domain);
    }
    let mut points = Vec::new();
    for &id in ids {
        let ps = if grid.is_empty() { identities::grid(id) } else { grid.points() };
        points.extend(ps.into_iter().map(|p| (id, p)));
    }
    let results = run_points(points, form, tol, jobs, cfg, "verify");
    let mut worst = Status::Ok;
    let (mut passed, mut flagged) = (0usize, 0usize);
    for (rec, status) in &results {
        writeln!(out, "{}", rec.to_line())?;
        worst = worst.max(*status);
        passed += usize::from(*status == Status::Ok);
        flagged += usize::from(rec.flagged == Some(true));
    }
    writeln!(
        err,
        "eulersum: {passed}/{} passed, {flagged} flagged stated-form discrepancies",
        results.len()
    )?;
    Ok(worst)
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_sweep(
    id: IdentityId,
    grid: &GridArgs,
    format: Format,
    form: Form,
    tol: f64,
    jobs: usize,
    cfg: &EvalConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<Status> {
    if !validate_run(tol, cfg, err)? {
        return Ok(Status::Domain);
    }
    let points = grid.points().into_iter().map(|p| (id, p)).collect();
    let results = run_points(points, form, tol, jobs, cfg, "sweep");
    let mut status = Status::Ok;
    for (rec, s) in &results {
        if let Some(e) = &rec.error {
            writeln!(err, "eulersum: {}: {e}", rec.id)?;
            status = status.max(*s);
        }
    }
    match format {
        Format::Json => {
            for (rec, _) in &results {
                writeln!(out, "{}", rec.to_line())?;
            }
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(&mut *out);
            w.write_record(["id", "n", "m", "p", "lhs", "rhs", "abs_err", "rel_err", "terms", "converged"])?;
            for (rec, _) in results.iter().filter(|(r, _)| r.error.is_none()) {
                w.serialize(CsvRow::from(rec))?;
            }
            w.flush()?;
        }
    }
    Ok(status)
}
