use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gradedk::clifford::{graded_k_lookup, parse_element, CliffordElement};
use gradedk::format::parse_graph;
use gradedk::linalg::IntMatrix;
use gradedk::report::{analyze_document, document_text, kgroups_document, snf_report, to_json};
use gradedk::{Error, Mode};

/// K-theory of graph C*-algebras and complex Clifford algebra arithmetic.
#[derive(Parser)]
#[command(name = "gradedk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a graph: sinks, sources, emitters, correspondence properties.
    Analyze {
        path: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Compute (K0, K1) of the graph algebra.
    Kgroups {
        path: String,
        /// Ordinary K-theory; edge signs are ignored.
        #[arg(long)]
        ungraded: bool,
        /// Apply the graded formula to graphs with sinks (experimental).
        #[arg(long)]
        allow_sinks: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Smith normal form of an integer matrix file.
    Snf {
        path: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Complex Clifford algebra operations.
    Clifford {
        #[command(subcommand)]
        op: CliffordOp,
    },
}

#[derive(Subcommand)]
enum CliffordOp {
    /// Product of two elements.
    Mul {
        a: String,
        b: String,
        /// Number of generators (defaults to the largest index used).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Adjoint of an element.
    Star {
        a: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Graded K-theory of Cliff_n.
    Ktheory {
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

enum Failure {
    Input(String),
    Precondition(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_precondition() {
            Failure::Precondition(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

fn with_path(path: &str) -> impl Fn(Error) -> Failure + '_ {
    move |e| match Failure::from(e) {
        Failure::Input(m) => Failure::Input(format!("{path}: {m}")),
        other => other,
    }
}

fn emit<T: Serialize>(format: Format, value: &T, text: String) {
    match format {
        Format::Json => print!("{}", to_json(value)),
        Format::Text => print!("{text}"),
    }
}

#[derive(Serialize)]
struct ElementResult {
    n: usize,
    result: String,
}

#[derive(Serialize)]
struct LookupResult {
    n: usize,
    k0: String,
    k1: String,
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze { path, format } => {
            let g = parse_graph(&read(&path)?).map_err(with_path(&path))?;
            let doc = analyze_document(&path, &g);
            emit(format, &doc, document_text(&doc));
        }
        Command::Kgroups { path, ungraded, allow_sinks, format } => {
            let g = parse_graph(&read(&path)?).map_err(with_path(&path))?;
            let mode = if ungraded { Mode::Ungraded } else { Mode::Graded };
            let doc = kgroups_document(&path, &g, mode, allow_sinks)?;
            for w in &doc.warnings {
                eprintln!("warning: {w}");
            }
            emit(format, &doc, document_text(&doc));
        }
        Command::Snf { path, format } => {
            let m = IntMatrix::parse_text(&read(&path)?).map_err(with_path(&path))?;
            let (report, text) = snf_report(&m).map_err(Failure::Input)?;
            emit(format, &report, text);
        }
        Command::Clifford { op } => match op {
            CliffordOp::Mul { a, b, n, format } => {
                let (x, y) = parse_pair(&a, &b, n)?;
                let r = x.multiply(&y)?;
                let out = ElementResult { n: r.n(), result: r.to_string() };
                emit(format, &out, format!("{}\n", out.result));
            }
            CliffordOp::Star { a, n, format } => {
                let r = parse_element(&a, n)?.adjoint();
                let out = ElementResult { n: r.n(), result: r.to_string() };
                emit(format, &out, format!("{}\n", out.result));
            }
            CliffordOp::Ktheory { n, format } => {
                let k = graded_k_lookup(n);
                let out = LookupResult { n, k0: k.k0.to_string(), k1: k.k1.to_string() };
                emit(format, &out, format!("{k}\n"));
            }
        },
    }
    Ok(())
}

/// Without `--n` both operands are placed in the smallest algebra that
/// holds either of them.
fn parse_pair(a: &str, b: &str, n: Option<usize>) -> Result<(CliffordElement, CliffordElement), Failure> {
    let x = parse_element(a, n)?;
    let y = parse_element(b, n)?;
    if n.is_some() {
        return Ok((x, y));
    }
    let m = x.n().max(y.n());
    Ok((x.widen(m)?, y.widen(m)?))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Precondition(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
