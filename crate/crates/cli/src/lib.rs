//! Argument parsing and dispatch for the `clifford` command.
//!
//! Every subcommand prints the serialization of a single library call, so the
//! binary stays a thin wrapper over `clifford-core`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use clifford_core::representation::{all_builtins, VerificationReport};
use clifford_core::{
    builtin, classify, grade_lex_orientation, permutation_orientation, product_table, AlgebraDescriptor,
    AnyMultivector, CliffordError, Convention, Sign, Signature, DEFAULT_TABLE_CAP,
};
use serde::Serialize;

/// Largest `n` accepted by `orientation`.
pub const ORIENTATION_CAP: usize = 24;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "clifford",
    version,
    about = "Clifford algebra tables, products, classification and representation checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the signed multiplication table of the basis blades.
    Table(TableArgs),
    /// Multiply two multivector documents.
    Mul(MulArgs),
    /// Identify Cl(p, q) as a matrix algebra.
    Classify(ClassifyArgs),
    /// Check built-in generator matrices.
    Verify(VerifyArgs),
    /// Print the orientation of the grade-sorting basis permutation for n = 1..N.
    Orientation(OrientationArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    GradeLex,
    Binary,
}

impl From<OrderArg> for Convention {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::GradeLex => Convention::GradeLex,
            OrderArg::Binary => Convention::Binary,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum JsonFormat {
    Json,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub q: usize,
    #[arg(long, value_enum, default_value = "grade-lex")]
    pub order: OrderArg,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
}

#[derive(Debug, Args)]
pub struct MulArgs {
    /// Expected signature; checked against both documents when given.
    #[arg(long, requires = "q")]
    pub p: Option<usize>,
    #[arg(long, requires = "p")]
    pub q: Option<usize>,
    #[arg(long)]
    pub lhs: PathBuf,
    #[arg(long)]
    pub rhs: PathBuf,
    #[arg(long, value_enum, default_value = "json")]
    pub format: JsonFormat,
}

#[derive(Debug, Args)]
#[group(id = "target", required = true, multiple = true)]
pub struct ClassifyArgs {
    #[arg(long, group = "target", requires = "q", conflicts_with = "sweep")]
    pub p: Option<usize>,
    #[arg(long, group = "target", requires = "p")]
    pub q: Option<usize>,
    /// Classify every split with 1 <= p + q <= N.
    #[arg(long, group = "target")]
    pub sweep: Option<usize>,
}

#[derive(Debug, Args)]
#[group(id = "which", required = true, multiple = false)]
pub struct VerifyArgs {
    #[arg(long, group = "which")]
    pub rep: Option<String>,
    #[arg(long, group = "which")]
    pub all: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrientationOrder {
    /// Grade, then numeric mask order.
    GradeWord,
    /// Grade, then ascending index tuples (the table order).
    GradeLex,
}

#[derive(Debug, Args)]
pub struct OrientationArgs {
    #[arg(long)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value = "grade-word")]
    pub order: OrientationOrder,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(rendered.as_bytes());
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug)]
enum Failure {
    Input(CliffordError),
    Io(std::io::Error),
    File(PathBuf, std::io::Error),
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Input(e) => write!(f, "{e}"),
            Failure::Io(e) => write!(f, "{e}"),
            Failure::File(path, e) => write!(f, "{}: {e}", path.display()),
        }
    }
}

impl From<CliffordError> for Failure {
    fn from(e: CliffordError) -> Self {
        Failure::Input(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Table(a) => {
            let table = product_table(Signature::new(a.p, a.q)?, a.order.into(), DEFAULT_TABLE_CAP)?;
            match a.format {
                TableFormat::Csv => out.write_all(table.to_csv().as_bytes())?,
                TableFormat::Json => writeln!(out, "{}", to_json(&table))?,
            }
            Ok(EXIT_OK)
        }
        Command::Mul(a) => {
            let lhs = read_document(&a.lhs)?;
            let rhs = read_document(&a.rhs)?;
            if let (Some(p), Some(q)) = (a.p, a.q) {
                for doc in [&lhs, &rhs] {
                    let s = doc.signature();
                    if (s.p(), s.q()) != (p, q) {
                        return Err(CliffordError::SignatureMismatch(p, q, s.p(), s.q()).into());
                    }
                }
            }
            let lhs_sig = lhs.signature();
            let rhs_sig = rhs.signature();
            if lhs_sig != rhs_sig {
                return Err(CliffordError::SignatureMismatch(lhs_sig.p(), lhs_sig.q(), rhs_sig.p(), rhs_sig.q()).into());
            }
            writeln!(out, "{}", lhs.geometric_product(&rhs)?.to_json())?;
            Ok(EXIT_OK)
        }
        Command::Classify(a) => {
            match (a.p, a.q, a.sweep) {
                (Some(p), Some(q), None) => writeln!(out, "{}", to_json(&classify(p, q)?))?,
                (None, None, Some(max)) => {
                    for entry in sweep(max)? {
                        writeln!(out, "{}", to_json(&entry))?;
                    }
                }
                _ => unreachable!("clap enforces the argument groups"),
            }
            Ok(EXIT_OK)
        }
        Command::Verify(a) => {
            let reports: Vec<VerificationReport> = match &a.rep {
                Some(name) => vec![builtin(name)?.verify()],
                None => all_builtins().iter().map(|r| r.verify()).collect(),
            };
            for r in &reports {
                writeln!(out, "{}", r.to_json())?;
            }
            let ok = reports.iter().all(|r| r.verdict.is_injective());
            Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Orientation(a) => {
            if a.max_n > ORIENTATION_CAP {
                return Err(CliffordError::OverCap { n: a.max_n, cap: ORIENTATION_CAP }.into());
            }
            for n in 1..=a.max_n {
                let sign = match a.order {
                    OrientationOrder::GradeWord => permutation_orientation(n)?,
                    OrientationOrder::GradeLex => grade_lex_orientation(n)?,
                };
                writeln!(out, "{}", orientation_line(n, sign))?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("library types always serialize")
}

fn read_document(path: &Path) -> Result<AnyMultivector, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::File(path.to_owned(), e))?;
    Ok(AnyMultivector::from_json(&text)?)
}

/// A classified split, serialized as `{"p", "q", <descriptor fields>}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepEntry {
    pub p: usize,
    pub q: usize,
    #[serde(flatten)]
    pub descriptor: AlgebraDescriptor,
}

/// Every split with `1 <= p + q <= max`, ordered by `n` then `p`.
pub fn sweep(max: usize) -> Result<Vec<SweepEntry>, CliffordError> {
    let mut entries = Vec::new();
    for n in 1..=max {
        for p in 0..=n {
            entries.push(SweepEntry { p, q: n - p, descriptor: classify(p, n - p)? });
        }
    }
    Ok(entries)
}

/// `"n +1"` or `"n -1"`.
pub fn orientation_line(n: usize, sign: Sign) -> String {
    format!("{n} {}1", sign)
}
