//! `crg`: polynomial tables, corollary counts and verification grids.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formulas;
use crate::oracle::{self, EnumerationPlan, DEFAULT_ELEMENT_CAP};
use crate::perm::GroupSpec;
use crate::poly::MPoly;
use crate::verify::{self, GridBounds, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "crg", version, about = "Fixed points, excedances and color sums in complex reflection groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print H^(m)_{r,s,n}(u,v,w).
    Poly(PolyArgs),
    /// Count involutions by (fix, exc_A) or by colored excedance.
    Count(CountArgs),
    /// Compare formulas against brute force over parameter grids.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Oracle,
    Theorem,
    Recurrence,
    #[value(name = "closed-m2")]
    ClosedM2,
    Corollary,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Theorem => "theorem",
            Method::Recurrence => "recurrence",
            Method::ClosedM2 => "closed-m2",
            Method::Corollary => "corollary",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(clap::Args, Debug)]
pub struct PolyArgs {
    #[arg(long)]
    pub r: u32,
    #[arg(long, default_value_t = 1)]
    pub s: u32,
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value_t = Method::Theorem)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Truncation order for series methods [default: max(n, 8)]
    #[arg(long)]
    pub trunc: Option<usize>,
    /// Largest ambient group r^n * n! the oracle may walk.
    #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
    pub cap: u128,
    /// Also write the output to this file.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(clap::Args, Debug)]
#[command(group(ArgGroup::new("statistic").required(true).args(["fix", "excclr"])))]
pub struct CountArgs {
    #[arg(long)]
    pub r: u32,
    #[arg(long)]
    pub s: u32,
    #[arg(long)]
    pub n: u32,
    /// Number of absolute fixed points (use with --exca).
    #[arg(long, requires = "exca")]
    pub fix: Option<u32>,
    /// Value of exc_A (use with --fix).
    #[arg(long, requires = "fix")]
    pub exca: Option<u32>,
    /// Value of the colored excedance r*exc_A + csum.
    #[arg(long)]
    pub excclr: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
    pub cap: u128,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Group,
    Euler,
    Ucoeff,
    Theorem,
    M2,
    Corollaries,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Group => Suite::Group,
            SuiteArg::Euler => Suite::Euler,
            SuiteArg::Ucoeff => Suite::UCoeff,
            SuiteArg::Theorem => Suite::Theorem,
            SuiteArg::M2 => Suite::M2,
            SuiteArg::Corollaries => Suite::Corollaries,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
    #[arg(long)]
    pub rmax: Option<u32>,
    #[arg(long)]
    pub nmax: Option<u32>,
    /// Comma-separated orders m, e.g. 2,3,4,6.
    #[arg(long, value_delimiter = ',')]
    pub mset: Option<Vec<u32>>,
    #[arg(long)]
    pub dmax: Option<u32>,
    #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
    pub cap: u128,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

/// One coefficient of an H-polynomial; `c` is a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub u: u32,
    pub v: u32,
    pub w: u32,
    pub c: String,
}

/// The JSON form of a `poly` result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub r: u32,
    pub s: u32,
    pub m: u32,
    pub n: u32,
    pub method: Method,
    pub terms: Vec<TermRecord>,
}

impl OutputRecord {
    pub fn new(spec: GroupSpec, method: Method, h: &MPoly) -> Result<Self> {
        let terms = h
            .integer_terms()?
            .into_iter()
            .map(|(e, c)| TermRecord {
                u: e[0],
                v: e[1],
                w: e[2],
                c: c.to_string(),
            })
            .collect();
        Ok(OutputRecord {
            r: spec.r(),
            s: spec.s(),
            m: spec.m(),
            n: spec.n(),
            method,
            terms,
        })
    }

    pub fn spec(&self) -> Result<GroupSpec> {
        GroupSpec::new(self.r, self.s, self.n, self.m)
    }

    pub fn polynomial(&self) -> Result<MPoly> {
        let mut h = MPoly::zero();
        for t in &self.terms {
            let c: BigInt = t
                .c
                .parse()
                .map_err(|_| Error::Parameter(format!("coefficient {:?} is not an integer", t.c)))?;
            h = &h + &MPoly::term([t.u, t.v, t.w], c);
        }
        Ok(h)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["u", "v", "w", "c"]).expect("in-memory write");
        for t in &self.terms {
            w.write_record([t.u.to_string(), t.v.to_string(), t.w.to_string(), t.c.clone()])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii")
    }
}

/// Result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn error(e: &Error) -> Self {
        let code = match e {
            Error::Consistency(_) => EXIT_FAILURE,
            _ => EXIT_USAGE,
        };
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code,
        }
    }
}

pub fn compute_poly(args: &PolyArgs) -> Result<MPoly> {
    let spec = GroupSpec::new(args.r, args.s, args.n, args.m)?;
    let n = args.n as usize;
    let trunc = args.trunc.unwrap_or(n.max(8));
    if trunc < n {
        return Err(Error::Parameter(format!("--trunc {trunc} is below n = {n}")));
    }
    let need_m2 = |what: &str| -> Result<()> {
        if args.m != 2 {
            return Err(Error::Parameter(format!("method {what} requires m = 2, got m = {}", args.m)));
        }
        Ok(())
    };
    match args.method {
        Method::Oracle => oracle::brute_h(&EnumerationPlan::with_cap(spec, args.cap)),
        Method::Theorem => Ok(formulas::h_egf(args.r, args.m, trunc)?.extract(n)?.filter_w_mod(args.s)),
        Method::Recurrence => Ok(formulas::h_recurrence(args.r, args.m, args.n)?.filter_w_mod(args.s)),
        Method::ClosedM2 => {
            need_m2("closed-m2")?;
            formulas::h2_closed(args.r, args.s, trunc)?.extract(n)
        }
        Method::Corollary => {
            need_m2("corollary")?;
            formulas::h2_coefficient_formula(args.r, args.s, args.n)
        }
    }
}

fn cmd_poly(args: &PolyArgs) -> Result<String> {
    let h = compute_poly(args)?;
    let spec = GroupSpec::new(args.r, args.s, args.n, args.m)?;
    let record = OutputRecord::new(spec, args.method, &h)?;
    Ok(match args.format {
        Format::Text => format!("{h}\n"),
        Format::Json => format!("{}\n", record.to_json()),
        Format::Csv => record.to_csv(),
    })
}

#[derive(Serialize)]
struct CountRecord {
    r: u32,
    s: u32,
    n: u32,
    statistic: &'static str,
    fix: Option<u32>,
    exca: Option<u32>,
    excclr: Option<u32>,
    formula: String,
    oracle: Option<String>,
}

fn cmd_count(args: &CountArgs) -> Result<(String, bool)> {
    let (r, s, n) = (args.r, args.s, args.n);
    let spec = GroupSpec::new(r, s, n, 2)?;
    let (formula, statistic) = match (args.fix, args.exca, args.excclr) {
        (Some(k), Some(l), None) => (formulas::count_fix_exca(r, s, n, k, l)?, "fix-exca"),
        (None, None, Some(k)) => (formulas::count_excclr(r, s, n, k)?, "excclr"),
        _ => return Err(Error::Parameter("choose either --fix with --exca, or --excclr".into())),
    };
    let plan = EnumerationPlan::with_cap(spec, args.cap);
    let oracle = match plan.check() {
        Ok(()) => Some(match (args.fix, args.exca, args.excclr) {
            (Some(k), Some(l), _) => oracle::brute_count(&plan, |t, _| t.fix == k && t.exc_a == l)?,
            (_, _, Some(k)) => oracle::brute_count(&plan, |_, clr| clr == k)?,
            _ => unreachable!("validated above"),
        }),
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let agree = oracle.as_ref().map_or(true, |o| *o == formula);
    let text = match args.format {
        Format::Json => {
            let record = CountRecord {
                r,
                s,
                n,
                statistic,
                fix: args.fix,
                exca: args.exca,
                excclr: args.excclr,
                formula: formula.to_string(),
                oracle: oracle.as_ref().map(BigInt::to_string),
            };
            format!("{}\n", serde_json::to_string(&record).expect("record serializes"))
        }
        _ => {
            let oracle_text = match &oracle {
                Some(o) => o.to_string(),
                None => format!("skipped (|G_{{{r},{n}}}| = {} exceeds cap {})", spec.ambient_order(), args.cap),
            };
            format!("formula: {formula}\noracle: {oracle_text}\n")
        }
    };
    Ok((text, agree))
}

fn cmd_verify(args: &VerifyArgs) -> Result<(String, bool)> {
    let bounds = GridBounds {
        rmax: args.rmax,
        nmax: args.nmax,
        mset: args.mset.clone(),
        dmax: args.dmax,
        cap: args.cap,
    };
    let report = verify::run(args.suite.into(), &bounds)?;
    let mut out = String::new();
    for cell in &report.cells {
        writeln!(out, "{cell}").expect("string write");
    }
    let failed = report.cells.iter().filter(|c| !c.passed).count();
    writeln!(out, "{} cells, {} failed", report.cells.len(), failed).expect("string write");
    if let Some(first) = report.first_failure() {
        writeln!(out, "first failure: {} {}: {}", first.suite, first.label, first.detail).expect("string write");
    }
    Ok((out, report.passed()))
}

fn write_out(path: &Option<std::path::PathBuf>, text: &str) -> Result<()> {
    if let Some(p) = path {
        std::fs::write(p, text).map_err(|e| Error::Parameter(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    stdout: rendered,
                    ..Outcome::default()
                }
            } else {
                Outcome {
                    stderr: rendered,
                    code,
                    ..Outcome::default()
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Poly(a) => cmd_poly(a).and_then(|t| write_out(&a.out, &t).map(|_| (t, true))),
        Command::Count(a) => cmd_count(a).and_then(|(t, ok)| write_out(&a.out, &t).map(|_| (t, ok))),
        Command::Verify(a) => cmd_verify(a).and_then(|(t, ok)| write_out(&a.out, &t).map(|_| (t, ok))),
    };
    match result {
        Ok((stdout, ok)) => Outcome {
            stdout,
            stderr: String::new(),
            code: if ok { EXIT_OK } else { EXIT_FAILURE },
        },
        Err(e) => Outcome::error(&e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &str) -> Outcome {
        run(std::iter::once("crg").chain(args.split_whitespace()))
    }

    #[test]
    fn poly_text() {
        let o = run_args("poly --r 1 --s 1 --m 2 --n 3 --method theorem");
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert_eq!(o.stdout, "3*u*v + u^3\n");
        assert_eq!(run_args("poly --r 2 --s 2 --m 2 --n 1 --method oracle").stdout, "u\n");
        assert_eq!(run_args("poly --r 2 --s 1 --m 1 --n 4").stdout, "u^4\n");
    }

    #[test]
    fn poly_errors() {
        assert_eq!(run_args("poly --r 4 --s 3 --m 2 --n 2").code, EXIT_USAGE);
        assert_eq!(run_args("poly --r 2 --s 1 --m 3 --n 2 --method closed-m2").code, EXIT_USAGE);
        let capped = run_args("poly --r 4 --s 1 --m 2 --n 6 --method oracle --cap 100");
        assert_eq!(capped.code, EXIT_USAGE);
        assert!(capped.stderr.contains("exceeds the cap"), "{}", capped.stderr);
        assert_eq!(run_args("poly --r 2 --m 2").code, EXIT_USAGE);
        assert_eq!(run_args("poly --r 2 --m 2 --n 9 --trunc 3").code, EXIT_USAGE);
    }

    #[test]
    fn json_round_trip_and_csv_agree() {
        let o = run_args("poly --r 2 --s 2 --m 2 --n 3 --format json");
        let record: OutputRecord = serde_json::from_str(o.stdout.trim()).unwrap();
        assert_eq!(serde_json::from_str::<OutputRecord>(&record.to_json()).unwrap(), record);
        assert_eq!(record.method, Method::Theorem);
        assert!(o.stdout.contains(r#""method":"theorem""#));

        let csv = run_args("poly --r 2 --s 2 --m 2 --n 3 --format csv").stdout;
        let mut reader = csv::Reader::from_reader(csv.as_bytes());
        let rows: Vec<TermRecord> = reader.deserialize().map(|r| r.unwrap()).collect();
        assert_eq!(rows, record.terms);
    }

    #[test]
    fn count_reports_both_sides() {
        let o = run_args("count --excclr 2 --r 2 --s 2 --n 2");
        assert_eq!(o.stdout, "formula: 3\noracle: 3\n");
        let o = run_args("count --fix 1 --exca 0 --r 2 --s 2 --n 1");
        assert_eq!(o.stdout, "formula: 1\noracle: 1\n");
        let o = run_args("count --fix 3 --exca 0 --r 2 --s 2 --n 2");
        assert_eq!(o.stdout, "formula: 0\noracle: 0\n");
        assert_eq!(o.code, 0);
    }

    #[test]
    fn count_rejects_other_regimes() {
        let o = run_args("count --excclr 2 --r 3 --s 1 --n 2");
        assert_eq!(o.code, EXIT_USAGE);
        assert!(o.stderr.contains("s not dividing r/2"), "{}", o.stderr);
        assert_eq!(run_args("count --excclr 2 --r 4 --s 2 --n 2").code, EXIT_USAGE);
        assert_eq!(run_args("count --r 2 --s 2 --n 2").code, EXIT_USAGE);
        assert_eq!(run_args("count --fix 1 --r 2 --s 2 --n 2").code, EXIT_USAGE);
    }

    #[test]
    fn verify_small() {
        let o = run_args("verify --suite euler --dmax 5");
        assert_eq!(o.code, 0, "{}", o.stdout);
        assert!(o.stdout.ends_with("5 cells, 0 failed\n"), "{}", o.stdout);
    }
}
