//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a negative mathematical
//! result (infeasible, invalid cycle, no cycle found).

pub mod document;

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::constructor::{construct, Construction};
use crate::error::Error;
use crate::hypercube::{set_max_k, Dimension, StepClass};
use crate::leaper::{
    leaper_by_name, leaper_feasible, leaper_step, leaper_verdict, LeaperSpec, TourRange, CATALOG,
};
use crate::oracle::{oracle_count_with, oracle_exists_with, OracleConfig};
use crate::verifier::verify_words;

pub use document::{CycleDocument, Encoding, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NEGATIVE: i32 = 2;

pub const MAX_K_ENV: &str = "LEAPER_CYCLES_MAX_K";

#[derive(Debug, Parser)]
#[command(
    name = "leaper-cycles",
    version,
    about = "Constant-step Hamiltonian cycles on {0,1}^k"
)]
pub struct Cli {
    /// Capacity limit on k for commands that build full cycles.
    #[arg(long, global = true, env = MAX_K_ENV, value_name = "K")]
    pub max_k: Option<u32>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a closed change-h tour of {0,1}^k.
    Construct(ConstructArgs),
    /// Check a cycle document.
    Verify(VerifyArgs),
    /// Exhaustive search at small k.
    Oracle(OracleArgs),
    /// Leaper catalog and tour feasibility.
    Leaper(LeaperArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tuples,
    Ints,
    Json,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("step").required(true).args(["h", "leaper"])))]
pub struct ConstructArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub h: Option<u64>,
    /// Catalog name; the step is a^2+b^2.
    #[arg(long)]
    pub leaper: Option<String>,
    #[arg(long, value_enum, default_value = "tuples")]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Step class to check; defaults to the document's h.
    #[arg(long)]
    pub h: Option<u64>,
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub h: u64,
    /// Count undirected cycles instead of stopping at the first.
    #[arg(long, conflicts_with = "witness")]
    pub count: bool,
    /// Emit the cycle found.
    #[arg(long)]
    pub witness: bool,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    #[arg(long, value_enum, default_value = "tuples")]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("piece").args(["name", "a"])))]
pub struct LeaperArgs {
    #[arg(long, visible_alias = "leaper")]
    pub name: Option<String>,
    #[arg(long, requires = "b")]
    pub a: Option<u32>,
    #[arg(long, requires = "a")]
    pub b: Option<u32>,
    #[arg(long)]
    pub k: Option<u32>,
}

/// Parses `args` and runs the command. Help and version requests print to
/// `out`; parse failures print to `err` and exit 1.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            }
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: format!("error: {e}"),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: format!("error: {e}"),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = (|| {
        if let Some(k) = cli.max_k {
            set_max_k(k).map_err(|e| usage(format!("error: --max-k: {e}")))?;
        }
        match &cli.command {
            Command::Construct(a) => cmd_construct(a, out),
            Command::Verify(a) => cmd_verify(a, out),
            Command::Oracle(a) => cmd_oracle(a, out),
            Command::Leaper(a) => cmd_leaper(a, out),
        }
    })();
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "{}", f.message);
            f.code
        }
    }
}

fn dimension(flag: &str, k: u32) -> Result<Dimension, Failure> {
    Dimension::new(k).map_err(|e| usage(format!("error: {flag}: {e}")))
}

fn step(flag: &str, h: u64) -> Result<StepClass, Failure> {
    StepClass::new(h).map_err(|e| usage(format!("error: {flag}: {e}")))
}

fn emit(
    doc: &CycleDocument,
    format: Format,
    output: Option<&Path>,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let doc = match format {
        Format::Tuples => CycleDocument {
            encoding: Encoding::Tuples,
            ..doc.clone()
        },
        Format::Ints | Format::Json => CycleDocument {
            encoding: Encoding::Ints,
            ..doc.clone()
        },
    };
    match output {
        Some(path) => {
            let file = fs::File::create(path)
                .map_err(|e| usage(format!("error: --output {}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            write_doc(&doc, format, &mut w)?;
            w.flush()?;
        }
        None => {
            let mut w = BufWriter::new(out);
            write_doc(&doc, format, &mut w)?;
            w.flush()?;
        }
    }
    Ok(())
}

fn write_doc<W: Write>(doc: &CycleDocument, format: Format, w: &mut W) -> io::Result<()> {
    if format == Format::Json {
        writeln!(w, "{}", doc.to_json())
    } else {
        doc.write_text(w)
    }
}

fn cmd_construct(args: &ConstructArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let k = dimension("--k", args.k)?;
    let h = match (&args.leaper, args.h) {
        (Some(name), _) => {
            let spec = leaper_by_name(name)?;
            let verdict = leaper_feasible(&spec, k);
            if !verdict.is_feasible() {
                writeln!(out, "{spec}: {verdict}")?;
                return Ok(EXIT_NEGATIVE);
            }
            leaper_step(&spec)
        }
        (None, Some(h)) => step("--h", h)?,
        (None, None) => return Err(usage("error: one of --h or --leaper is required")),
    };
    match construct(k, h)? {
        Construction::Infeasible(verdict) => {
            writeln!(out, "k={k} h={h}: {verdict}")?;
            Ok(EXIT_NEGATIVE)
        }
        Construction::Cycle(cycle) => {
            let doc = CycleDocument::from_cycle(&cycle, Encoding::Tuples);
            emit(&doc, args.format, args.output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
    }
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = fs::read_to_string(&args.input)
        .map_err(|e| usage(format!("error: {}: {e}", args.input.display())))?;
    let doc = CycleDocument::parse(&text)
        .map_err(|e| usage(format!("error: {}: {e}", args.input.display())))?;
    let k = dimension("header k", doc.k)?;
    let h = step("h", args.h.unwrap_or(doc.h))?;
    let report = verify_words(k, &doc.cycle, h);
    if report.valid() {
        writeln!(
            out,
            "valid: closed change-{h} tour of {{0,1}}^{k} ({} vertices)",
            doc.cycle.len()
        )?;
        Ok(EXIT_OK)
    } else {
        writeln!(
            out,
            "invalid: {} violation(s) for change-{h} in {{0,1}}^{k}",
            report.violations.len()
        )?;
        for v in &report.violations {
            writeln!(out, "  {v}")?;
        }
        Ok(EXIT_NEGATIVE)
    }
}

fn cmd_oracle(args: &OracleArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let k = dimension("--k", args.k)?;
    let h = step("--h", args.h)?;
    if args.threads == 0 {
        return Err(usage("error: --threads must be at least 1"));
    }
    let config = OracleConfig {
        threads: args.threads,
        ..OracleConfig::default()
    };
    let result = if args.count {
        oracle_count_with(k, h, &config)?
    } else {
        oracle_exists_with(k, h, args.witness, &config)?
    };
    writeln!(out, "k={k} h={h}")?;
    writeln!(out, "exists: {}", result.exists)?;
    if let Some(c) = result.count {
        writeln!(out, "count: {c}")?;
    }
    writeln!(out, "nodes_explored: {}", result.nodes_explored)?;
    if let Some(w) = &result.witness {
        let doc = CycleDocument::from_path(w, h.h(), Encoding::Tuples, true);
        emit(&doc, args.format, args.output.as_deref(), out)?;
    }
    Ok(if result.exists {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

fn cmd_leaper(args: &LeaperArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let spec = match (&args.name, args.a, args.b) {
        (Some(name), _, _) => leaper_by_name(name)?,
        (None, Some(a), Some(b)) => LeaperSpec::new(a, b)?,
        _ => {
            if args.k.is_some() {
                return Err(usage("error: --k needs --name or --a/--b"));
            }
            write_catalog(out)?;
            return Ok(EXIT_OK);
        }
    };
    let h = leaper_step(&spec);
    writeln!(out, "leaper: {spec}")?;
    writeln!(out, "h: {h}")?;
    match args.k {
        None => {
            let verdict = leaper_verdict(&spec);
            match verdict.feasible_for {
                TourRange::Never => writeln!(out, "min_k: never ({})", verdict.reason)?,
                TourRange::FromDimension(m) => writeln!(out, "min_k: {m}")?,
            }
            Ok(EXIT_OK)
        }
        Some(k) => {
            let k = dimension("--k", k)?;
            let verdict = leaper_feasible(&spec, k);
            writeln!(out, "k: {k}")?;
            writeln!(out, "verdict: {verdict}")?;
            Ok(if verdict.is_feasible() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
    }
}

fn write_catalog(out: &mut dyn Write) -> io::Result<()> {
    writeln!(
        out,
        "{:<12} {:>2} {:>2} {:>3} {:>6}",
        "name", "a", "b", "h", "min_k"
    )?;
    for &(name, _, _) in CATALOG {
        let spec = leaper_by_name(name).expect("catalog entry");
        let min = match leaper_verdict(&spec).feasible_for {
            TourRange::Never => "never".to_string(),
            TourRange::FromDimension(m) => m.to_string(),
        };
        writeln!(
            out,
            "{:<12} {:>2} {:>2} {:>3} {:>6}",
            name,
            spec.a(),
            spec.b(),
            leaper_step(&spec).h(),
            min
        )?;
    }
    Ok(())
}
