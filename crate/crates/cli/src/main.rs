//! `terwilliger`: command-line access to the group, scheme, Terwilliger-algebra,
//! invariant-theory and code computations, plus the full verification report.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use terwilliger::codes::{fixtures, parse_generator_matrix, InnerProduct};
use terwilliger::matgroup::{parse_generator_file, GroupName};
use terwilliger::report::{self, GroupInput, ReportError};
use terwilliger::scheme::build_scheme;
use terwilliger::terwilliger::{TAlgebra, DEFAULT_MAX_DEPTH};

#[derive(Parser, Debug)]
#[command(
    name = "terwilliger",
    version,
    about = "Exact Terwilliger algebras and invariant rings of the code groups G_I-G_IV"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Worker threads; 0 picks one per core.
    #[arg(long, env = "TERWILLIGER_THREADS", default_value_t = 0, global = true)]
    threads: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct GroupArgs {
    /// Built-in group: I, II, III or IV.
    #[arg(long, conflicts_with = "generators")]
    group: Option<GroupName>,

    /// JSON file with generator matrices (array of 2x2 arrays of numbers in text form).
    #[arg(long)]
    generators: Option<PathBuf>,

    /// Largest group the closure may build.
    #[arg(long, default_value_t = 100_000)]
    cap: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, conjugacy classes and representatives.
    GroupInfo(GroupArgs),
    /// Association scheme: bounds and intersection numbers.
    Scheme {
        #[command(flatten)]
        group: GroupArgs,
        /// Include the full p_ij^k tensor.
        #[arg(long)]
        tensor: bool,
        /// Print only the number of nonzero p_ij^k.
        #[arg(long)]
        triples: bool,
    },
    /// Dimension, block counts, center, idempotents and degrees of T(G).
    Terwilliger {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
    },
    /// E-polynomial generators, Molien series and the generation certificate.
    Invariants {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = report::DEFAULT_TERMS)]
        terms: usize,
    },
    /// Molien series coefficients.
    Molien {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = report::DEFAULT_TERMS)]
        terms: usize,
    },
    /// The E-polynomial phi_k.
    Epoly {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        k: u32,
    },
    /// Weight enumerator, type and invariance of a linear code.
    Code {
        /// Built-in sample code.
        #[arg(long, value_parser = fixtures::NAMES, conflicts_with = "file")]
        fixture: Option<String>,
        /// JSON generator matrix (rows of integers mod q; [a, b] pairs for q = 4).
        #[arg(long, requires = "q")]
        file: Option<PathBuf>,
        /// Field order for --file: 2, 3 or 4.
        #[arg(long)]
        q: Option<u8>,
        /// Use the Hermitian form x.conj(y) for duality.
        #[arg(long)]
        hermitian: bool,
    },
    /// Every check for the chosen groups in one report.
    VerifyAll {
        /// Restrict to these groups (repeatable); all four by default.
        #[arg(long)]
        group: Vec<GroupName>,
        #[arg(long, default_value_t = report::DEFAULT_TERMS)]
        terms: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Report(ReportError),
}

impl From<ReportError> for CliError {
    fn from(e: ReportError) -> Self {
        CliError::Report(e)
    }
}

fn resolve_group(args: &GroupArgs) -> Result<GroupInput, CliError> {
    match (&args.group, &args.generators) {
        (Some(name), None) => Ok(GroupInput::builtin(*name)),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            let gens = parse_generator_file(&text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            let label = path
                .file_stem()
                .map_or("custom".into(), |s| s.to_string_lossy().into_owned());
            Ok(GroupInput::from_generators(&label, &gens, args.cap)?)
        }
        _ => Err(CliError::Usage(
            "give exactly one of --group or --generators".into(),
        )),
    }
}

/// Renders a JSON value as indented `key: value` lines.
fn render_text(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                if is_scalar_like(v) {
                    out.push_str(&format!("{pad}{k}: {}\n", inline(v)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render_text(v, indent + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for v in items {
                if is_scalar_like(v) {
                    out.push_str(&format!("{pad}- {}\n", inline(v)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render_text(v, indent + 1, out);
                }
            }
        }
        v => out.push_str(&format!("{pad}{}\n", inline(v))),
    }
}

/// Scalars and arrays of scalars (or of such arrays) print on one line.
fn is_scalar_like(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(items) => {
            items
                .iter()
                .all(|i| !i.is_object() && (!i.is_array() || is_scalar_like(i)))
                && items.len() <= 64
        }
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!(
            "[{}]",
            items.iter().map(inline).collect::<Vec<_>>().join(", ")
        ),
        other => other.to_string(),
    }
}

fn emit<T: Serialize>(format: Format, report: &T) -> String {
    let value = serde_json::to_value(report).expect("reports serialize");
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            render_text(&value, 0, &mut s);
            s
        }
    }
}

/// Output text and whether every requested verification passed.
fn run(cli: &Cli) -> Result<(String, bool), CliError> {
    let f = cli.format;
    Ok(match &cli.command {
        Command::GroupInfo(args) => {
            let input = resolve_group(args)?;
            (emit(f, &report::group_info(&input)), true)
        }
        Command::Scheme {
            group,
            tensor,
            triples,
        } => {
            let input = resolve_group(group)?;
            let scheme = build_scheme(input.group.clone()).map_err(ReportError::from)?;
            if *triples {
                (format!("{}\n", scheme.nonvanishing_triples()), true)
            } else {
                let r = report::scheme_report(&input, &scheme, *tensor);
                (emit(f, &r), r.p_symmetric)
            }
        }
        Command::Terwilliger { group, max_depth } => {
            let input = resolve_group(group)?;
            let scheme = build_scheme(input.group.clone()).map_err(ReportError::from)?;
            let t = TAlgebra::build(&scheme, *max_depth).map_err(ReportError::from)?;
            let r = report::terwilliger_report(&input, &scheme, &t);
            let ok = r.degree_square_sum == r.dim_t;
            (emit(f, &r), ok)
        }
        Command::Invariants { group, terms } => {
            let input = resolve_group(group)?;
            let r = report::invariants_report(&input, *terms)?;
            let ok = r.certificate.as_ref().is_none_or(|c| c.passed()) && r.reynolds.matches_molien;
            (emit(f, &r), ok)
        }
        Command::Molien { group, terms } => {
            let input = resolve_group(group)?;
            let r = report::molien_report(&input, *terms)?;
            let ok = r.matches_product != Some(false);
            (emit(f, &r), ok)
        }
        Command::Epoly { group, k } => {
            let input = resolve_group(group)?;
            let r = report::epoly_report(&input, *k)?;
            let ok = r.invariant;
            (emit(f, &r), ok)
        }
        Command::Code {
            fixture,
            file,
            q,
            hermitian,
        } => {
            let (name, code) = match (fixture, file) {
                (Some(name), None) => (
                    name.clone(),
                    fixtures::by_name(name).expect("validated by clap"),
                ),
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
                    let q = q.expect("required by clap");
                    let code = parse_generator_matrix(&text, q)
                        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
                    (path.display().to_string(), code)
                }
                _ => {
                    return Err(CliError::Usage(
                        "give exactly one of --fixture or --file".into(),
                    ))
                }
            };
            let form = if *hermitian {
                InnerProduct::Hermitian
            } else {
                InnerProduct::Euclidean
            };
            let r = report::code_report(&name, &code, form)?;
            let ok = r.passed();
            (emit(f, &r), ok)
        }
        Command::VerifyAll {
            group,
            terms,
            max_depth,
        } => {
            let groups = if group.is_empty() {
                GroupName::ALL.to_vec()
            } else {
                group.clone()
            };
            let r = report::verify_all(&groups, *terms, *max_depth)?;
            (emit(f, &r), r.passed())
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match report::with_threads(cli.threads, || run(&cli)) {
        Ok(r) => r,
        Err(e) => Err(CliError::Report(e)),
    };
    match result {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: some verifications failed");
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Report(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
