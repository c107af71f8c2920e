//! Command-line front end.
//!
//! Exit codes: 0 on success (degenerate surgeries are reported in-band),
//! 1 on I/O failure, 2 on usage or validation errors.

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::distinctness::{analyze_em, analyze_params, analyze_ttk};
use crate::exact_arith::{cf_to_rational, rational_to_cf, ContinuedFraction, ExtRational};
use crate::families::{EmKnotParams, FamilyParams, SlopeIndex, TwistedTorusKnotParams};
use crate::report::{EnumerationSummary, RecordReport};
use crate::seifert::{sfs_homeomorphic_op, sfs_normalize, Base, SfsDescriptor};
use crate::tangle::FamilyCase;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum ReportFormat {
    #[default]
    #[value(name = "text")]
    HumanText,
    #[value(name = "jsonl")]
    JsonLines,
    #[value(name = "csv")]
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "seifert-ps",
    version,
    about = "Primitive/Seifert positions of Seifert fibered surgeries, computed exactly"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = ReportFormat::HumanText, global = true)]
    pub format: ReportFormat,

    /// Write output to PATH instead of stdout.
    #[arg(long, value_name = "PATH", global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convert between a continued fraction and a rational tangle fraction.
    Tangle(TangleArgs),
    /// Report on the surgery pq + n(p+q)^2 on the twisted torus knot K(p, q, p+q, n).
    #[command(allow_negative_numbers = true)]
    Ttk { p: i64, q: i64, n: i64 },
    /// Report on k(l, m, n, 0) (case1) or k(l, m, 0, p) (case2) at slope gamma_s.
    #[command(allow_negative_numbers = true)]
    Emk {
        case: CaseArg,
        l: i64,
        m: i64,
        /// n for case1, p for case2.
        n_or_p: i64,
        /// 0 or 1.
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        slope: u8,
    },
    /// Sweep a parameter box and report every record.
    #[command(subcommand)]
    Enumerate(EnumerateCommand),
    /// Compare two Seifert fibered spaces by their invariants.
    #[command(name = "compare-sfs", allow_negative_numbers = true)]
    CompareSfs {
        #[arg(long, value_enum, default_value_t = BaseArg::Disk)]
        base: BaseArg,
        /// Comma-separated fractions, e.g. 4/3,9/5
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct TangleArgs {
    /// Continued fraction entries a1,...,an (a_n is the integer part).
    #[arg(long, allow_hyphen_values = true)]
    pub cf: Option<String>,
    /// A fraction p/q, an integer, or inf.
    #[arg(long, allow_hyphen_values = true)]
    pub rational: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum EnumerateCommand {
    /// Twisted torus knots; invalid (p, q) pairs are skipped.
    Ttk {
        #[arg(long, allow_hyphen_values = true)]
        p: IntRange,
        #[arg(long, allow_hyphen_values = true)]
        q: IntRange,
        #[arg(long, allow_hyphen_values = true)]
        n: IntRange,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Tangle-built knots k(l, m, n, 0) or k(l, m, 0, p).
    Emk {
        #[arg(long)]
        case: CaseArg,
        #[arg(long, allow_hyphen_values = true)]
        l: IntRange,
        #[arg(long, allow_hyphen_values = true)]
        m: IntRange,
        /// Range of n (case1).
        #[arg(long, allow_hyphen_values = true, conflicts_with = "p")]
        n: Option<IntRange>,
        /// Range of p (case2).
        #[arg(long, allow_hyphen_values = true)]
        p: Option<IntRange>,
        #[arg(long, value_enum, default_value_t = SlopeArg::Both)]
        slope: SlopeArg,
        #[command(flatten)]
        jobs: Jobs,
    },
}

#[derive(Debug, Args, Clone, Copy)]
pub struct Jobs {
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseArg(pub FamilyCase);

impl FromStr for CaseArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "1" | "case1" => Ok(CaseArg(FamilyCase::Case1)),
            "2" | "case2" => Ok(CaseArg(FamilyCase::Case2)),
            _ => Err(format!("expected case1 or case2, got {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SlopeArg {
    #[value(name = "0")]
    Zero,
    #[value(name = "1")]
    One,
    Both,
}

impl SlopeArg {
    fn slopes(self) -> &'static [SlopeIndex] {
        match self {
            SlopeArg::Zero => &[SlopeIndex::Gamma0],
            SlopeArg::One => &[SlopeIndex::Gamma1],
            SlopeArg::Both => &[SlopeIndex::Gamma0, SlopeIndex::Gamma1],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BaseArg {
    Disk,
    Sphere,
}

/// Inclusive integer range `a..b` (also `a..=b`, or a single `a`); empty
/// when `a > b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRange {
    pub start: i64,
    pub end: i64,
}

impl IntRange {
    pub fn iter(&self) -> std::ops::RangeInclusive<i64> {
        self.start..=self.end
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("expected a range like 2..5, got {s:?}");
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
        match s.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                Ok(IntRange {
                    start: parse(a)?,
                    end: parse(b)?,
                })
            }
            None => {
                let v = parse(s)?;
                Ok(IntRange { start: v, end: v })
            }
        }
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let result = match &cli.output {
        Some(path) => match File::create(path) {
            Ok(f) => {
                let mut w = BufWriter::new(f);
                execute(&cli, &mut w).and_then(|()| w.flush().map_err(CliError::Io))
            }
            Err(e) => Err(CliError::Io(io::Error::new(
                e.kind(),
                format!("cannot write {}: {e}", path.display()),
            ))),
        },
        None => execute(&cli, stdout),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_IO
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Tangle(args) => cmd_tangle(args, cli.format, out),
        Command::Ttk { p, q, n } => {
            let params = TwistedTorusKnotParams::new(*p, *q, *n)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            write_records(&[RecordReport::from(&analyze_ttk(params))], cli.format, out, None)
        }
        Command::Emk {
            case,
            l,
            m,
            n_or_p,
            slope,
        } => {
            let params = EmKnotParams {
                case: case.0,
                l: *l,
                m: *m,
                n_or_p: *n_or_p,
                slope: SlopeIndex::from_s(*slope).expect("validated by clap"),
            };
            write_records(&[RecordReport::from(&analyze_em(params))], cli.format, out, None)
        }
        Command::Enumerate(e) => cmd_enumerate(e, cli.format, out),
        Command::CompareSfs {
            base,
            first,
            second,
        } => cmd_compare_sfs(*base, first, second, cli.format, out),
    }
}

fn parse_cf(s: &str) -> Result<ContinuedFraction, CliError> {
    let entries = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| CliError::Usage(format!("cannot parse {t:?} as an integer entry")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    ContinuedFraction::new(entries).map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_rational(s: &str) -> Result<ExtRational, CliError> {
    s.parse::<ExtRational>().map_err(|e| CliError::Usage(e.to_string()))
}

#[derive(Serialize)]
struct TangleOutput {
    cf: Vec<String>,
    fraction: String,
    /// Floor-based expansion of the fraction, absent for `inf`.
    expansion: Option<Vec<String>>,
}

fn cmd_tangle(args: &TangleArgs, format: ReportFormat, out: &mut dyn Write) -> Result<(), CliError> {
    let (cf, fraction) = match (&args.cf, &args.rational) {
        (Some(s), _) => {
            let cf = parse_cf(s)?;
            let r = cf_to_rational(&cf);
            (cf, r)
        }
        (None, Some(s)) => {
            let r = parse_rational(s)?;
            let cf = rational_to_cf(&r).map_err(|e| CliError::Usage(e.to_string()))?;
            (cf, r)
        }
        (None, None) => return Err(CliError::Usage("pass --cf or --rational".into())),
    };
    let expansion = rational_to_cf(&fraction).ok();
    let strings = |cf: &ContinuedFraction| cf.entries().iter().map(|a| a.to_string()).collect();
    let o = TangleOutput {
        cf: strings(&cf),
        fraction: fraction.to_canonical_string(),
        expansion: expansion.as_ref().map(strings),
    };
    match format {
        ReportFormat::HumanText => {
            writeln!(out, "continued fraction {cf}")?;
            writeln!(out, "fraction {fraction}")?;
            match &expansion {
                Some(e) => writeln!(out, "expansion {e}")?,
                None => writeln!(out, "expansion none (infinite)")?,
            }
        }
        ReportFormat::JsonLines => {
            serde_json::to_writer(&mut *out, &o)?;
            writeln!(out)?;
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["cf", "fraction", "expansion"])?;
            w.write_record([
                o.cf.join(","),
                o.fraction.clone(),
                o.expansion.map(|e| e.join(",")).unwrap_or_default(),
            ])?;
            w.flush()?;
        }
    }
    Ok(())
}

/// Parameter boxes in lexicographic order.
pub fn enumeration_params(cmd: &EnumerateCommand) -> Result<Vec<FamilyParams>, String> {
    let mut params = Vec::new();
    match cmd {
        EnumerateCommand::Ttk { p, q, n, .. } => {
            for p in p.iter() {
                for q in q.iter() {
                    for n in n.iter() {
                        if let Ok(t) = TwistedTorusKnotParams::new(p, q, n) {
                            params.push(FamilyParams::Ttk(t));
                        }
                    }
                }
            }
        }
        EnumerateCommand::Emk {
            case,
            l,
            m,
            n,
            p,
            slope,
            ..
        } => {
            let third = match (case.0, n, p) {
                (FamilyCase::Case1, Some(r), None) | (FamilyCase::Case2, None, Some(r)) => *r,
                (FamilyCase::Case1, _, _) => return Err("case1 needs --n".into()),
                (FamilyCase::Case2, _, _) => return Err("case2 needs --p".into()),
            };
            for l in l.iter() {
                for m in m.iter() {
                    for x in third.iter() {
                        for &s in slope.slopes() {
                            params.push(FamilyParams::Em(EmKnotParams {
                                case: case.0,
                                l,
                                m,
                                n_or_p: x,
                                slope: s,
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(params)
}

/// Analyzes every parameter choice, in parallel, keeping input order.
pub fn enumerate_reports(params: &[FamilyParams], jobs: Option<usize>) -> Vec<RecordReport> {
    let work = || {
        params
            .par_iter()
            .map(|&p| RecordReport::from(&analyze_params(p)))
            .collect::<Vec<_>>()
    };
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(work),
        None => work(),
    }
}

fn cmd_enumerate(
    cmd: &EnumerateCommand,
    format: ReportFormat,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let params = enumeration_params(cmd).map_err(CliError::Usage)?;
    let jobs = match cmd {
        EnumerateCommand::Ttk { jobs, .. } | EnumerateCommand::Emk { jobs, .. } => jobs.jobs,
    };
    let reports = enumerate_reports(&params, jobs);
    let summary = EnumerationSummary::of(&reports);
    write_records(&reports, format, out, Some(&summary))
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a EnumerationSummary,
}

fn write_records(
    reports: &[RecordReport],
    format: ReportFormat,
    out: &mut dyn Write,
    summary: Option<&EnumerationSummary>,
) -> Result<(), CliError> {
    match format {
        ReportFormat::HumanText => {
            for r in reports {
                out.write_all(r.to_text().as_bytes())?;
            }
            if let Some(s) = summary {
                let counts: Vec<String> =
                    s.verdicts.iter().map(|(k, v)| format!("{k}={v}")).collect();
                writeln!(
                    out,
                    "summary: {} records; {}; {} distinct braid indices",
                    s.records,
                    if counts.is_empty() { "no verdicts".to_string() } else { counts.join(", ") },
                    s.distinct_braid_indices
                )?;
            }
        }
        ReportFormat::JsonLines => {
            for r in reports {
                serde_json::to_writer(&mut *out, r)?;
                writeln!(out)?;
            }
            if let Some(s) = summary {
                serde_json::to_writer(&mut *out, &SummaryLine { summary: s })?;
                writeln!(out)?;
            }
        }
        ReportFormat::Csv => {
            {
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(RecordReport::csv_header())?;
                for r in reports {
                    w.write_record(r.csv_row())?;
                }
                w.flush()?;
            }
            if let Some(s) = summary {
                writeln!(out, "# records={}", s.records)?;
                for (k, v) in &s.verdicts {
                    writeln!(out, "# verdict {k}={v}")?;
                }
                writeln!(out, "# distinct_braid_indices={}", s.distinct_braid_indices)?;
            }
        }
    }
    Ok(())
}

fn parse_invariants(s: &str) -> Result<Vec<ExtRational>, CliError> {
    s.split(',').map(parse_rational).collect()
}

#[derive(Serialize)]
struct CompareOutput {
    base: &'static str,
    normalized: [Vec<String>; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    totals: Option<[String; 2]>,
    homeomorphic: bool,
}

fn cmd_compare_sfs(
    base: BaseArg,
    first: &str,
    second: &str,
    format: ReportFormat,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let base = match base {
        BaseArg::Disk => Base::DiskD2,
        BaseArg::Sphere => Base::SphereS2,
    };
    let build = |s: &str| -> Result<SfsDescriptor, CliError> {
        SfsDescriptor::from_ext(base, &parse_invariants(s)?)
            .map_err(|e| CliError::Usage(e.to_string()))
    };
    let (d1, d2) = (build(first)?, build(second)?);
    let homeomorphic =
        sfs_homeomorphic_op(&d1, &d2).map_err(|e| CliError::Usage(e.to_string()))?;
    let (n1, n2) = (sfs_normalize(&d1), sfs_normalize(&d2));
    let list = |d: &SfsDescriptor| -> Vec<String> {
        d.invariants().iter().map(crate::exact_arith::format_ratio).collect()
    };
    let totals = (base == Base::SphereS2).then(|| {
        [
            crate::exact_arith::format_ratio(&n1.total()),
            crate::exact_arith::format_ratio(&n2.total()),
        ]
    });
    let o = CompareOutput {
        base: match base {
            Base::DiskD2 => "disk",
            Base::SphereS2 => "sphere",
        },
        normalized: [list(&n1), list(&n2)],
        totals,
        homeomorphic,
    };
    match format {
        ReportFormat::HumanText => {
            writeln!(out, "first:  {d1}  mod 1: {{{}}}", o.normalized[0].join(", "))?;
            writeln!(out, "second: {d2}  mod 1: {{{}}}", o.normalized[1].join(", "))?;
            if let Some([a, b]) = &o.totals {
                writeln!(out, "invariant sums: {a} vs {b}")?;
            }
            writeln!(
                out,
                "{}",
                if homeomorphic { "homeomorphic" } else { "NOT homeomorphic" }
            )?;
        }
        ReportFormat::JsonLines => {
            serde_json::to_writer(&mut *out, &o)?;
            writeln!(out)?;
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["base", "first_mod1", "second_mod1", "homeomorphic"])?;
            w.write_record([
                o.base.to_string(),
                o.normalized[0].join(","),
                o.normalized[1].join(","),
                homeomorphic.to_string(),
            ])?;
            w.flush()?;
        }
    }
    Ok(())
}
