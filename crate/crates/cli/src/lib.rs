//! Command-line front end: `exists`, `build`, `survey` and `verify`.
//!
//! Exit codes: 0 success, 1 usage error, 2 mathematical nonexistence or
//! refusal, 3 partial (interval) results, 4 assertion failure.

pub mod report;
pub mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};
use duadiq::arith::{ord_mod, square_roots};
use duadiq::cyclic::{cyclotomic_cosets, CyclicError};
use duadiq::distance::{Budget, DistanceError};
use duadiq::duadic::{
    build_quartet, degeneracy_certificate, distinct_splittings, duadic_exists, find_splittings, splitting_by,
    Construction, DuadicError, Splitting,
};
use duadiq::galois::{field_of_order, FieldError};
use duadiq::stabilizer::{
    css_from_quartet, degeneracy_verdict, hermitian_from_quartet, hermitian_splitting, StabilizerError,
};
use report::*;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NONEXISTENT: i32 = 2;
pub const EXIT_PARTIAL: i32 = 3;
pub const EXIT_ASSERTION: i32 = 4;

/// Largest `--max-n` accepted by `survey` and `verify`.
pub const MAX_SURVEY_N: u32 = 255;

/// Environment variable overriding the default worker count.
pub const WORKERS_ENV: &str = "DUADIQ_WORKERS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Nonexistent(String),
    #[error("assertion failed: {0}")]
    Assertion(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Nonexistent(_) => EXIT_NONEXISTENT,
            CliError::Assertion(_) | CliError::Io(_) | CliError::Json(_) | CliError::Csv(_) => EXIT_ASSERTION,
        }
    }
}

impl From<CyclicError> for CliError {
    fn from(e: CyclicError) -> Self {
        match e {
            CyclicError::Field(f) => f.into(),
            CyclicError::EvenLength(_) | CyclicError::NotCoprime { .. } | CyclicError::NotUnit { .. } => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Assertion(other.to_string()),
        }
    }
}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<DuadicError> for CliError {
    fn from(e: DuadicError) -> Self {
        match e {
            DuadicError::Cyclic(c) => c.into(),
            DuadicError::Arith(a) => CliError::Usage(a.to_string()),
            other => CliError::Assertion(other.to_string()),
        }
    }
}

impl From<StabilizerError> for CliError {
    fn from(e: StabilizerError) -> Self {
        match e {
            StabilizerError::Duadic(d) => d.into(),
            StabilizerError::Cyclic(c) => c.into(),
            StabilizerError::HermitianRefused(m) => CliError::Nonexistent(format!("Hermitian construction refused: {m}")),
            StabilizerError::Distance(DistanceError::BadBudget) => CliError::Usage("budget must be positive".into()),
            other => CliError::Assertion(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "duadiq", version, about = "Duadic codes and the quantum codes built from them")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructionArg {
    Css,
    Hermitian,
}

impl From<ConstructionArg> for Construction {
    fn from(c: ConstructionArg) -> Self {
        match c {
            ConstructionArg::Css => Construction::Css,
            ConstructionArg::Hermitian => Construction::Hermitian,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Work budget for enumeration and support search, e.g. 67108864 or 2^26.
    #[arg(long, value_parser = parse_budget, default_value = "2^26")]
    pub budget: u64,
    /// Worker threads; defaults to $DUADIQ_WORKERS or the number of CPUs.
    #[arg(long)]
    pub workers: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

impl RunArgs {
    pub fn budget(&self) -> Result<Budget, CliError> {
        let workers = match self.workers {
            Some(w) => w,
            None => match std::env::var(WORKERS_ENV) {
                Ok(v) => v
                    .parse()
                    .map_err(|_| CliError::Usage(format!("{WORKERS_ENV} must be a positive integer")))?,
                Err(_) => Budget::default().workers,
            },
        };
        if workers == 0 {
            return Err(CliError::Usage("--workers must be positive".into()));
        }
        Ok(Budget {
            enumeration: self.budget,
            support: self.budget,
            workers,
        })
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether duadic codes of length n exist over GF(q).
    Exists {
        n: u32,
        q: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Build a quantum code and report its parameters.
    Build {
        construction: ConstructionArg,
        n: u32,
        q: u64,
        /// Use the splitting with this identifier.
        #[arg(long)]
        splitting_id: Option<String>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Tabulate every admissible length up to --max-n.
    Survey {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        max_n: u32,
        #[arg(long, value_enum, default_value = "css")]
        construction: ConstructionArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run the property suites up to --max-n.
    Verify {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        max_n: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        run: RunArgs,
    },
}

/// Parses `N` or `B^E`.
pub fn parse_budget(s: &str) -> Result<u64, String> {
    let v = match s.split_once('^') {
        Some((b, e)) => {
            let b: u64 = b.trim().parse().map_err(|_| format!("bad base in {s:?}"))?;
            let e: u32 = e.trim().parse().map_err(|_| format!("bad exponent in {s:?}"))?;
            b.checked_pow(e).ok_or_else(|| format!("{s} overflows"))?
        }
        None => s.trim().parse().map_err(|_| format!("bad budget {s:?}"))?,
    };
    if v == 0 {
        return Err("budget must be positive".into());
    }
    Ok(v)
}

pub(crate) fn progress(msg: &str) {
    eprintln!("{msg}");
}

fn elapsed_us(t: Instant) -> u64 {
    t.elapsed().as_micros() as u64
}

fn echo(b: &Budget) -> BudgetEcho {
    BudgetEcho {
        enumeration: b.enumeration,
        support: b.support,
    }
}

fn check_field(q: u64) -> Result<(), CliError> {
    field_of_order(q)?;
    Ok(())
}

pub fn exists_report(n: u32, q: u64) -> Result<ExistsReport, CliError> {
    check_field(q)?;
    let cs = cyclotomic_cosets(n, q)?;
    let roots = square_roots(q, n as u64).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(ExistsReport {
        schema_version: SCHEMA_VERSION,
        command: "exists".into(),
        n,
        q,
        exists: duadic_exists(n, q)?,
        witness: roots.last().copied(),
        square_roots: roots,
        order: ord_mod(n as u64, q).map_err(|e| CliError::Usage(e.to_string()))?,
        cosets: CosetSummary {
            count: cs.len(),
            sizes: cs.cosets().iter().map(|c| c.len()).collect(),
            representatives: cs.cosets().iter().map(|c| c[0]).collect(),
        },
    })
}

/// `mu_{-1}` when it gives a splitting, otherwise the first splitting found.
pub fn default_css_splitting(n: u32, q: u64) -> Result<Option<Splitting>, DuadicError> {
    if let Some(s) = splitting_by(n, q, n as u64 - 1)? {
        return Ok(Some(s));
    }
    Ok(find_splittings(n, q, Some(1))?.into_iter().next())
}

fn choose_splitting(
    construction: Construction,
    n: u32,
    q: u64,
    id: Option<&str>,
) -> Result<Splitting, CliError> {
    let code_q = match construction {
        Construction::Css => q,
        Construction::Hermitian => q * q,
    };
    let preferred = match construction {
        Construction::Css => default_css_splitting(n, q)?,
        Construction::Hermitian => hermitian_splitting(n, q)?,
    };
    if let Some(id) = id {
        if let Some(s) = preferred.filter(|s| s.id() == id) {
            return Ok(s);
        }
        return distinct_splittings(n, code_q)?
            .into_iter()
            .find(|s| s.id() == id)
            .ok_or_else(|| CliError::Usage(format!("no splitting of {n} over GF({code_q}) has id {id}")));
    }
    match construction {
        Construction::Css => preferred.ok_or_else(|| {
            CliError::Nonexistent(format!("no duadic codes of length {n} over GF({q}): {q} is not a square mod {n}"))
        }),
        Construction::Hermitian => preferred.ok_or_else(|| {
            CliError::Nonexistent(format!(
                "Hermitian construction refused: mu_-{q} gives no splitting of {n} over GF({code_q})"
            ))
        }),
    }
}

pub fn build_report(
    construction: Construction,
    n: u32,
    q: u64,
    splitting_id: Option<&str>,
    budget: &Budget,
) -> Result<BuildReport, CliError> {
    let start = Instant::now();
    check_field(q)?;
    cyclotomic_cosets(n, q)?;
    let code_q = match construction {
        Construction::Css => q,
        Construction::Hermitian => q
            .checked_mul(q)
            .ok_or_else(|| CliError::Usage(format!("GF({q}^2) is too large")))?,
    };
    let field = field_of_order(code_q)?;
    let s = choose_splitting(construction, n, q, splitting_id)?;
    progress(&format!("build {construction} n={n} q={q}: splitting {}", s.id()));
    let quartet = build_quartet(&s, field)?;
    let params = match construction {
        Construction::Css => css_from_quartet(&quartet, budget)?,
        Construction::Hermitian => hermitian_from_quartet(&quartet, budget)?,
    };
    let certificate = degeneracy_certificate(n, q, construction).map_err(CliError::from)?;
    let verdict = degeneracy_verdict(&params, &certificate);
    Ok(BuildReport {
        schema_version: SCHEMA_VERSION,
        command: "build".into(),
        input: BuildInput {
            n,
            q,
            construction,
            splitting_id: s.id(),
            budget: echo(budget),
        },
        splitting: SplittingSummary::new(&s),
        quartet: QuartetSummary::new(&quartet),
        status: if params.is_exact() { Status::Exact } else { Status::Partial },
        params,
        certificate,
        verdict,
        timing: Timing {
            total_us: elapsed_us(start),
            workers: budget.workers,
        },
    })
}

fn survey_row(construction: Construction, n: u32, q: u64, budget: &Budget) -> Result<SurveyRow, CliError> {
    let order = ord_mod(n as u64, q).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut row = SurveyRow {
        n,
        exists: false,
        order,
        order_odd: order % 2 == 1,
        mu_minus_one_splits: false,
        mu_minus_q_splits: None,
        splitting_id: None,
        k: None,
        d_lo: None,
        d_hi: None,
        d_exact: None,
        purity_lo: None,
        purity_hi: None,
        purity_exact: None,
        degenerate: None,
        square_root: None,
        square_root_mu_minus_one: None,
        note: None,
    };
    match construction {
        Construction::Css => {
            row.exists = duadic_exists(n, q)?;
            row.mu_minus_one_splits = splitting_by(n, q, n as u64 - 1)?.is_some();
        }
        Construction::Hermitian => {
            row.exists = duadic_exists(n, q * q)?;
            row.mu_minus_one_splits = splitting_by(n, q * q, n as u64 - 1)?.is_some();
            row.mu_minus_q_splits = Some(hermitian_splitting(n, q)?.is_some());
        }
    }
    if !row.exists {
        return Ok(row);
    }
    match build_report(construction, n, q, None, budget) {
        Ok(r) => row.fill(&r.params),
        Err(CliError::Nonexistent(m)) => row.note = Some(m),
        Err(e) => return Err(e),
    }
    Ok(row)
}

pub fn survey_report(construction: Construction, q: u64, max_n: u32, budget: &Budget) -> Result<SurveyReport, CliError> {
    let start = Instant::now();
    check_field(q)?;
    if max_n > MAX_SURVEY_N {
        return Err(CliError::Usage(format!("--max-n is capped at {MAX_SURVEY_N}")));
    }
    let mut rows = Vec::new();
    for n in (3..=max_n).step_by(2).filter(|&n| duadiq::arith::gcd(n as u64, q) == 1) {
        progress(&format!("survey: n = {n}"));
        rows.push(survey_row(construction, n, q, budget)?);
    }
    Ok(SurveyReport {
        schema_version: SCHEMA_VERSION,
        command: "survey".into(),
        q,
        max_n,
        construction,
        budget: echo(budget),
        rows,
        timing: Timing {
            total_us: elapsed_us(start),
            workers: budget.workers,
        },
    })
}

pub fn verify_report(q: u64, max_n: u32, budget: &Budget) -> Result<VerifyReport, CliError> {
    let start = Instant::now();
    check_field(q)?;
    if max_n > MAX_SURVEY_N {
        return Err(CliError::Usage(format!("--max-n is capped at {MAX_SURVEY_N}")));
    }
    let suites = verify::run_suites(q, max_n, budget);
    Ok(VerifyReport {
        schema_version: SCHEMA_VERSION,
        command: "verify".into(),
        q,
        max_n,
        budget: echo(budget),
        total_failed: suites.iter().map(|s| s.failed).sum(),
        total_skipped: suites.iter().map(|s| s.skipped).sum(),
        suites,
        timing: Timing {
            total_us: elapsed_us(start),
            workers: budget.workers,
        },
    })
}

pub fn to_json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn to_csv<T: serde::Serialize>(rows: &[T]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

fn execute(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Exists { n, q, output } => {
            let r = exists_report(n, q)?;
            emit(&to_json(&r)?, output.as_ref())?;
            Ok(if r.exists { EXIT_OK } else { EXIT_NONEXISTENT })
        }
        Command::Build {
            construction,
            n,
            q,
            splitting_id,
            run,
        } => {
            let r = build_report(construction.into(), n, q, splitting_id.as_deref(), &run.budget()?)?;
            emit(&to_json(&r)?, run.output.as_ref())?;
            Ok(match r.status {
                Status::Exact => EXIT_OK,
                Status::Partial => EXIT_PARTIAL,
            })
        }
        Command::Survey {
            q,
            max_n,
            construction,
            format,
            run,
        } => {
            let r = survey_report(construction.into(), q, max_n, &run.budget()?)?;
            let text = match format {
                Format::Json => to_json(&r)?,
                Format::Csv => to_csv(&r.rows)?,
            };
            emit(&text, run.output.as_ref())?;
            Ok(if r.rows.iter().any(SurveyRow::is_partial) { EXIT_PARTIAL } else { EXIT_OK })
        }
        Command::Verify { q, max_n, format, run } => {
            let r = verify_report(q, max_n, &run.budget()?)?;
            let text = match format {
                Format::Json => to_json(&r)?,
                Format::Csv => to_csv(&r.suites.iter().map(SuiteRow::from).collect::<Vec<_>>())?,
            };
            emit(&text, run.output.as_ref())?;
            for s in &r.suites {
                eprintln!("{:<28} passed {:>6}  failed {:>4}  skipped {:>4}", s.name, s.passed, s.failed, s.skipped);
                for f in &s.failures {
                    eprintln!("  {f}");
                }
            }
            Ok(if r.total_failed > 0 { EXIT_ASSERTION } else { EXIT_OK })
        }
    }
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
