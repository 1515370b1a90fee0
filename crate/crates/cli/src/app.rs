//! Command-line definitions and dispatch.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use acd_core::code::DEFAULT_ENUMERATION_CAP;
use acd_core::metrics::{self, BestKnownTable, Filters, SearchMode, SearchSpec};
use acd_core::{AdditiveCode, CodeType, Error as CoreError};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::codefile::CodeFile;
use crate::corpus::{self, ExampleResult};
use crate::report::{AnalysisReport, DualReport, ImageReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "acd",
    version,
    about = "Analyze and search additive complementary dual codes over F2^alpha x F4^beta"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Largest number of codewords or codes any single enumeration may visit.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP, global = true)]
    pub cap: u64,
    /// Seed for random search.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Type, Gram matrix, ACD verdict, dual, punctured codes and binary image.
    Analyze {
        path: PathBuf,
        /// Extra best-known entries, one "n k d" per line.
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Generators of the dual code.
    Dual { path: PathBuf },
    /// Binary image W(C): generators, Gram matrix, LCD flag and distance.
    Wimage {
        path: PathBuf,
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Checks every worked example of the corpus against its expectations.
    VerifyPaper {
        /// Read `*.acd` files from this directory instead of the embedded corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Random or exhaustive search for codes passing the filters.
    Search(SearchArgs),
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub alpha: usize,
    #[arg(long)]
    pub beta: usize,
    /// F2-dimension of the generated codes; random when omitted.
    #[arg(long)]
    pub k: Option<usize>,
    /// Required type, written "(alpha,beta;k1,k2',k2'')".
    #[arg(long = "type", value_parser = parse_type)]
    pub code_type: Option<CodeType>,
    #[arg(long, value_enum, value_delimiter = ',')]
    pub filter: Vec<FilterArg>,
    /// Minimum distance of the binary image.
    #[arg(long)]
    pub min_d: Option<usize>,
    #[arg(long, default_value_t = 1000, conflicts_with = "exhaustive")]
    pub trials: u64,
    /// Visit every subspace instead of sampling.
    #[arg(long)]
    pub exhaustive: bool,
    /// Stop after this many hits.
    #[arg(long)]
    pub max_hits: Option<usize>,
    #[arg(long)]
    pub table: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    Acd,
    ImageLcd,
}

/// Parses "(a,b;k1,k2',k2'')"; the parentheses are optional.
pub fn parse_type(s: &str) -> Result<CodeType, String> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    let (shape, blocks) = inner
        .split_once(';')
        .ok_or_else(|| format!("expected (alpha,beta;k1,k2',k2''), found {s:?}"))?;
    let nums = |part: &str, n: usize| -> Result<Vec<usize>, String> {
        let v: Vec<usize> = part
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| format!("{t:?} is not a nonnegative integer"))
            })
            .collect::<Result<_, _>>()?;
        if v.len() == n {
            Ok(v)
        } else {
            Err(format!("expected {n} numbers in {part:?}"))
        }
    };
    let a = nums(shape, 2)?;
    let b = nums(blocks, 3)?;
    Ok(CodeType {
        alpha: a[0],
        beta: a[1],
        k1: b[0],
        k2p: b[1],
        k2pp: b[2],
    })
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse {
        path: String,
        source: crate::codefile::ParseError,
    },
    #[error("{0}")]
    Io(String),
    #[error("enumeration needs {required} items but --cap is {cap}; rerun with --cap {required} or larger")]
    Cap { required: u128, cap: u64 },
    #[error("{0}")]
    Core(CoreError),
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::CapExceeded { required, cap } => Failure::Cap { required, cap },
            CoreError::InvalidSearch(msg) => Failure::Usage(msg),
            other => Failure::Core(other),
        }
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn read_code(path: &Path) -> Result<AdditiveCode, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    let file = CodeFile::parse(&text).map_err(|source| Failure::Parse {
        path: path.display().to_string(),
        source,
    })?;
    Ok(file.code())
}

fn read_table(path: Option<&Path>) -> Result<BestKnownTable, Failure> {
    let mut table = BestKnownTable::builtin();
    if let Some(p) = path {
        let text = fs::read_to_string(p)
            .map_err(|e| Failure::Io(format!("cannot read {}: {e}", p.display())))?;
        table
            .extend_from_str(&text)
            .map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
    }
    Ok(table)
}

fn emit<T: Serialize + std::fmt::Display>(
    out: &mut dyn Write,
    format: Format,
    value: &T,
) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::Io(e.to_string());
    match format {
        Format::Text => writeln!(out, "{value}").map_err(io),
        Format::Json => {
            let json = serde_json::to_string_pretty(value).expect("reports serialize");
            writeln!(out, "{json}").map_err(io)
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match &cli.command {
        Command::Analyze { path, table } => {
            let code = read_code(path)?;
            let table = read_table(table.as_deref())?;
            let report = AnalysisReport::of(&code, &table, cli.cap)?;
            emit(out, cli.format, &report)?;
            Ok(EXIT_OK)
        }
        Command::Dual { path } => {
            let code = read_code(path)?;
            emit(out, cli.format, &DualReport::of(&code))?;
            Ok(EXIT_OK)
        }
        Command::Wimage { path, table } => {
            let code = read_code(path)?;
            let table = read_table(table.as_deref())?;
            emit(out, cli.format, &ImageReport::of(&code, &table, cli.cap)?)?;
            Ok(EXIT_OK)
        }
        Command::VerifyPaper { corpus: dir } => verify(dir.as_deref(), cli, out),
        Command::Search(args) => search(args, cli, out),
    }
}

#[derive(Serialize)]
struct VerifySummary {
    passed: usize,
    failed: usize,
    examples: Vec<ExampleResult>,
}

impl std::fmt::Display for VerifySummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in &self.examples {
            if r.pass {
                writeln!(f, "PASS {} ({} checks)", r.id, r.checked)?;
            } else {
                writeln!(f, "FAIL {}", r.id)?;
                for msg in &r.failures {
                    writeln!(f, "    {msg}")?;
                }
            }
        }
        write!(f, "{} passed, {} failed", self.passed, self.failed)
    }
}

fn verify(dir: Option<&Path>, cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let examples = match dir {
        Some(d) => corpus::load_dir(d).map_err(Failure::Io)?,
        None => corpus::embedded(),
    };
    let table = BestKnownTable::builtin();
    let results: Vec<ExampleResult> = examples
        .iter()
        .map(|e| corpus::check(e, &table, cli.cap))
        .collect();
    let failed = results.iter().filter(|r| !r.pass).count();
    let summary = VerifySummary {
        passed: results.len() - failed,
        failed,
        examples: results,
    };
    emit(out, cli.format, &summary)?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILURE })
}

#[derive(Serialize)]
struct HitLine {
    trial: u64,
    #[serde(rename = "type")]
    code_type: String,
    rows: Vec<String>,
    acd: bool,
    conditions: Vec<String>,
    image_n: usize,
    image_k: usize,
    image_d: Option<usize>,
    best_known: Option<usize>,
    optimality: String,
}

impl std::fmt::Display for HitLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let d = self
            .image_d
            .map_or_else(|| "-".to_string(), |d| d.to_string());
        let conditions = if self.conditions.is_empty() {
            "-".to_string()
        } else {
            self.conditions.join(",")
        };
        write!(
            f,
            "trial {}: type {} rows {} acd {} conditions {} image [{},{},{}] {}",
            self.trial,
            self.code_type,
            self.rows.join(" "),
            if self.acd { "yes" } else { "no" },
            conditions,
            self.image_n,
            self.image_k,
            d,
            self.optimality
        )
    }
}

fn search(args: &SearchArgs, cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let mode = if args.exhaustive {
        SearchMode::Exhaustive
    } else {
        SearchMode::Random {
            trials: args.trials,
        }
    };
    let mut spec = SearchSpec::new(args.alpha, args.beta, mode);
    spec.k = args.k;
    spec.target_type = args.code_type;
    spec.filters = Filters {
        acd: args.filter.contains(&FilterArg::Acd),
        image_lcd: args.filter.contains(&FilterArg::ImageLcd),
        min_distance: args.min_d,
    };
    spec.seed = cli.seed;
    spec.cap = cli.cap;
    let table = read_table(args.table.as_deref())?;
    let hits = metrics::search(&spec, &table)?;
    let limit = args.max_hits.unwrap_or(usize::MAX);
    for hit in hits.take(limit) {
        let line = HitLine {
            trial: hit.trial,
            code_type: hit.code.code_type().to_string(),
            rows: hit.code.rows().iter().map(|r| r.to_string()).collect(),
            acd: hit.certificate.is_acd(),
            conditions: hit
                .certificate
                .matched_conditions
                .iter()
                .map(|c| c.name().to_string())
                .collect(),
            image_n: hit.distance.n,
            image_k: hit.distance.k,
            image_d: hit.distance.d,
            best_known: hit.distance.best_known,
            optimality: hit.distance.optimality.to_string(),
        };
        let io = |e: std::io::Error| Failure::Io(e.to_string());
        match cli.format {
            Format::Text => writeln!(out, "{line}").map_err(io)?,
            Format::Json => writeln!(
                out,
                "{}",
                serde_json::to_string(&line).expect("hits serialize")
            )
            .map_err(io)?,
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_argument() {
        let t = parse_type("(3,2;1,0,1)").unwrap();
        assert_eq!(t.to_string(), "(3,2;1,0,1)");
        assert!(parse_type("3,2,1,0,1").is_err());
        assert!(parse_type("(3,2;1,0)").is_err());
    }
}
