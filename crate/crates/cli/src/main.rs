use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use subres_core::hilbert::{hilbert_u64, DegreeVector};
use subres_core::par::Exec;
use subres_core::report::{DeltaDoc, Meta, Report};
use subres_core::residual::cmd_residual;
use subres_core::subres::{build_generic_system, subresultant, MonomialSet};
use subres_core::sweep::{cmd_verify, NuMode, SMode, SweepConfig, DEFAULT_MAX_DEGREE, DEFAULT_MAX_N, DEFAULT_MAX_ROWS, DEFAULT_SAMPLE};
use subres_core::Error;

const EXIT_FAILED: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_ZERO: u8 = 3;

#[derive(Parser)]
#[command(name = "subres", version, about = "Multivariate subresultants of generic homogeneous systems")]
struct Cli {
    /// Seed for every random choice; required by `verify` and `residual`.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for sweeps; 1 runs serially, 0 picks automatically.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert function of a complete intersection.
    Hilbert {
        #[arg(long)]
        n: usize,
        /// Comma-separated degrees, e.g. `3,2`.
        #[arg(long, value_parser = parse_degree_list)]
        degrees: Degrees,
        /// Inclusive range `a..b`, or a single degree.
        #[arg(long, value_parser = parse_range)]
        t: (i64, i64),
    },
    /// Subresultant of the generic system for one monomial set.
    Delta {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_degree_list)]
        degrees: Degrees,
        #[arg(long)]
        nu: u32,
        /// Monomials of degree `nu`, e.g. `x1*x2^2, x2^3`.
        #[arg(long)]
        s: String,
    },
    /// Sweep degree vectors and monomial sets, checking degrees, content and irreducibility.
    Verify(VerifyArgs),
    /// Residual resultant through an ideal of points.
    Residual {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_degree_list)]
        degrees: Degrees,
        #[arg(long)]
        nu: u32,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 2)]
    n_min: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    n_max: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
    max_degree: u32,
    /// Explicit degree vectors separated by `;`, e.g. `2,2;4,2`. Replaces the enumeration.
    #[arg(long)]
    degrees: Option<String>,
    #[arg(long, value_enum, default_value_t = NuArg::AllInRange)]
    nu_mode: NuArg,
    /// Take every monomial set instead of a sample.
    #[arg(long)]
    exhaustive: bool,
    #[arg(long, default_value_t = DEFAULT_SAMPLE)]
    samples: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_ROWS)]
    max_rows: u64,
    /// Lift the default size budget.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum NuArg {
    AllInRange,
    AtBound,
    AboveBound,
}

/// A comma-separated degree list.
#[derive(Clone, Debug)]
struct Degrees(Vec<u32>);

fn parse_degree_list(s: &str) -> Result<Degrees, String> {
    parse_degrees(s).map(Degrees)
}

fn parse_degrees(s: &str) -> Result<Vec<u32>, String> {
    let d: Vec<u32> = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|e| format!("bad degree `{}`: {e}", p.trim())))
        .collect::<Result<_, _>>()?;
    if d.is_empty() || d.contains(&0) {
        return Err("degrees must be positive".into());
    }
    Ok(d)
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let parse = |p: &str| p.trim().parse::<i64>().map_err(|e| format!("bad degree `{}`: {e}", p.trim()));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let t = parse(s)?;
            (t, t)
        }
    };
    if b < a {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

/// Failure with its exit code and message.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::GenericRankDeficient => EXIT_ZERO,
            Error::Parse { .. }
            | Error::UnknownVariable(_)
            | Error::InvalidDegrees(_)
            | Error::WrongCardinality { .. }
            | Error::WrongDegree { .. }
            | Error::DuplicateMonomial(_)
            | Error::OutOfRange(_)
            | Error::Config(_)
            | Error::Dimension(_) => EXIT_INVALID,
            _ => EXIT_FAILED,
        };
        let msg = match e {
            Error::GenericRankDeficient => "the subresultant is identically zero for this monomial set".to_string(),
            other => other.to_string(),
        };
        Failure(code, msg)
    }
}

/// Rendered output plus whether the run passed its own checks.
struct Output {
    text: String,
    structured: String,
    passed: bool,
}

fn require_seed(seed: Option<u64>, cmd: &str) -> Result<u64, Failure> {
    seed.ok_or_else(|| Failure(EXIT_INVALID, format!("`{cmd}` draws random values and needs --seed")))
}

fn exec(jobs: usize) -> Exec {
    Exec::with_jobs(jobs)
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Hilbert { n, degrees, t } => {
            let start = Instant::now();
            let dv = DegreeVector::new(*n, &degrees.0)?;
            let ts: Vec<i64> = (t.0..=t.1).collect();
            let values: Vec<u64> = ts.iter().map(|&t| hilbert_u64(&dv, t)).collect();
            let text = values.iter().map(u64::to_string).collect::<Vec<_>>().join(",") + "\n";
            let body = serde_json::json!({ "n": n, "degrees": degrees.0, "t": ts, "values": values });
            let rep = Report::new("hilbert", body, Meta::new(false, 1, start.elapsed().as_secs_f64() * 1e3, Vec::new()));
            Ok(Output { text, structured: rep.to_structured(), passed: true })
        }
        Command::Delta { n, degrees, nu, s } => {
            let start = Instant::now();
            let dv = DegreeVector::new(*n, &degrees.0)?;
            let sys = build_generic_system(&dv)?;
            let set = MonomialSet::parse(&dv, *nu, s)?;
            let r = subresultant(&sys, &set)?;
            let doc = DeltaDoc::from_result(&r);
            let text = format!(
                "{}\nmultidegree {:?}, content {}, {} terms, {:?}\n",
                doc.text, doc.multidegree, doc.content, doc.terms, doc.position
            );
            let rep = Report::new("delta", doc, Meta::new(false, 1, start.elapsed().as_secs_f64() * 1e3, Vec::new()));
            Ok(Output { text, structured: rep.to_structured(), passed: true })
        }
        Command::Verify(v) => {
            let seed = require_seed(cli.seed, "verify")?;
            let degree_vectors = match &v.degrees {
                Some(src) => Some(
                    src.split(';')
                        .map(parse_degrees)
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| Failure(EXIT_INVALID, e))?,
                ),
                None => None,
            };
            let cfg = SweepConfig {
                n_min: v.n_min,
                n_max: v.n_max,
                max_degree: v.max_degree,
                degree_vectors,
                nu_mode: match v.nu_mode {
                    NuArg::AllInRange => NuMode::AllInRange,
                    NuArg::AtBound => NuMode::AtBound,
                    NuArg::AboveBound => NuMode::AboveBound,
                },
                s_mode: if v.exhaustive { SMode::Exhaustive } else { SMode::Sample(v.samples) },
                seed: Some(seed),
                max_rows: v.max_rows,
                allow_large: v.allow_large,
            };
            let rep = cmd_verify(&cfg, exec(cli.jobs))?;
            let mut text = rep.body.to_text();
            for c in rep.body.failing() {
                text.push_str(&format!("offending: d={:?} nu={} S={}\n", c.degrees, c.nu, c.s));
            }
            Ok(Output { text, structured: rep.to_structured(), passed: rep.body.passed })
        }
        Command::Residual { n, degrees, nu } => {
            let seed = require_seed(cli.seed, "residual")?;
            let rep = cmd_residual(*n, &degrees.0, *nu, seed)?;
            Ok(Output { text: rep.body.to_text(), structured: rep.to_structured(), passed: rep.body.passed })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut doc = match cli.format {
                Format::Text => out.text,
                Format::Structured => out.structured,
            };
            if !doc.ends_with('\n') {
                doc.push('\n');
            }
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, doc) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(EXIT_FAILED);
                    }
                }
                None => print!("{doc}"),
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILED)
            }
        }
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
