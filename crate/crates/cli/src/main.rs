//! Command-line front end: build R-matrices and sigma tables, run the exact
//! verification suite, and export evaluated matrices.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
//! or validation errors.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{One, Zero};

use qlax_core::export::{parse_rational, ExportDocument};
use qlax_core::matrix::GradedMatrix;
use qlax_core::rep::Rep;
use qlax_core::report::Mode;
use qlax_core::rmatrix::{build_vector_r, build_vector_rt, RMode, RtMode};
use qlax_core::scalar::Rational;
use qlax_core::sigma::{closed_form_sigma, SigmaTable};
use qlax_core::verify::{run_checks, Check};
use qlax_core::{BasisTable, Error};

#[derive(Parser)]
#[command(
    name = "qlax",
    version,
    about = "Exact Uq[osp(2|n)] Lax-operator and R-matrix toolkit"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build an object and print it as a deterministic document.
    Build(BuildArgs),
    /// Run exact verification checks and report per-check results.
    Verify(VerifyArgs),
    /// Evaluate an object at an exact rational q and export it.
    ExportEval(ExportEvalArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Object {
    #[value(name = "vector-R")]
    VectorR,
    #[value(name = "vector-RT")]
    VectorRt,
    #[value(name = "sigma-table")]
    SigmaTable,
}

impl Object {
    fn name(&self) -> &'static str {
        match self {
            Object::VectorR => "vector-R",
            Object::VectorRt => "vector-RT",
            Object::SigmaTable => "sigma-table",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BuildMode {
    #[value(name = "closed-form")]
    ClosedForm,
    #[value(name = "recursion")]
    Recursion,
}

impl BuildMode {
    fn name(&self) -> &'static str {
        match self {
            BuildMode::ClosedForm => "closed-form",
            BuildMode::Recursion => "recursion",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    #[value(name = "dense-text")]
    DenseText,
}

#[derive(Args)]
struct BuildArgs {
    /// Even rank parameter, n >= 2.
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    object: Object,
    #[arg(long, value_enum, default_value = "closed-form")]
    mode: BuildMode,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Evaluate at an exact rational q ("NUM/DEN" or "NUM"); q in {0, 1, -1}
    /// is rejected.
    #[arg(long = "at-q")]
    at_q: Option<String>,
    /// Write to a file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Even rank parameter, n >= 2.
    #[arg(long)]
    n: usize,
    /// Comma-separated subset of: defining, serre-extra, intertwine, ybe,
    /// fusion, appendix, classical, mode-agreement. Defaults to all.
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
    /// Run in numeric mode at an exact rational q instead of symbolically.
    #[arg(long = "at-q")]
    at_q: Option<String>,
    /// Cap on verifier worker threads.
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct ExportEvalArgs {
    /// Even rank parameter, n >= 2.
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    object: Object,
    /// Exact rational q ("NUM/DEN" or "NUM"); only q = 0 is rejected.
    #[arg(long = "at-q", required = true)]
    at_q: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum CliError {
    Usage(String),
    CheckFailed,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.cmd {
        Cmd::Build(args) => cmd_build(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::ExportEval(args) => cmd_export_eval(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::CheckFailed) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn require_even_n(n: usize) -> Result<(), CliError> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(CliError::Usage(format!(
            "n must be an even integer >= 2, got {n}"
        )));
    }
    Ok(())
}

fn parse_q(text: &str, allow_units: bool) -> Result<Rational, CliError> {
    let q = parse_rational(text).map_err(|e| CliError::Usage(e.to_string()))?;
    if q.is_zero() {
        return Err(CliError::Usage("q = 0 is not allowed".into()));
    }
    if !allow_units && (q.is_one() || (-&q).is_one()) {
        return Err(CliError::Usage(format!(
            "q must lie outside {{0, 1, -1}}, got {q}"
        )));
    }
    Ok(q)
}

fn eval_matrix(m: GradedMatrix, at_q: &Option<Rational>) -> Result<GradedMatrix, CliError> {
    match at_q {
        Some(q) => Ok(m.eval_q(q)?),
        None => Ok(m),
    }
}

fn build_document(
    n: usize,
    object: Object,
    mode: BuildMode,
    at_q: &Option<Rational>,
) -> Result<ExportDocument, CliError> {
    let doc = match object {
        Object::VectorR => {
            let mode_core = match mode {
                BuildMode::ClosedForm => RMode::ClosedForm,
                BuildMode::Recursion => RMode::Recursion,
            };
            let m = eval_matrix(build_vector_r(n, mode_core)?, at_q)?;
            ExportDocument::from_matrix(object.name(), mode.name(), at_q.clone(), n, &m)
        }
        Object::VectorRt => {
            // recursion mode takes the graded twist of the recursion-built R
            let mode_core = match mode {
                BuildMode::ClosedForm => RtMode::ClosedForm,
                BuildMode::Recursion => RtMode::Dagger,
            };
            let m = eval_matrix(build_vector_rt(n, mode_core)?, at_q)?;
            ExportDocument::from_matrix(object.name(), mode.name(), at_q.clone(), n, &m)
        }
        Object::SigmaTable => {
            let table = BasisTable::new(n)?;
            let mut mats: BTreeMap<(usize, usize), GradedMatrix> = BTreeMap::new();
            match mode {
                BuildMode::ClosedForm => {
                    let roots = qlax_core::weights::RootSystem::new(n)?;
                    for pair in table.strict_pairs() {
                        let m = closed_form_sigma(&table, &roots, pair.b, pair.a)?;
                        mats.insert((pair.b, pair.a), eval_matrix(m, at_q)?);
                    }
                }
                BuildMode::Recursion => {
                    let rep = Rep::vector(n)?;
                    for ((b, a), m) in SigmaTable::extended(n)?.evaluate(&rep) {
                        mats.insert((b, a), eval_matrix(m, at_q)?);
                    }
                }
            }
            ExportDocument::from_sigma_table(mode.name(), at_q.clone(), n, table.dim, &mats)
        }
    };
    Ok(doc)
}

fn emit(doc: &ExportDocument, format: Format, out: &Option<PathBuf>) -> Result<(), CliError> {
    let text = match format {
        Format::Json => doc.to_json(),
        Format::DenseText => doc.to_dense_text(),
    };
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Usage(format!("cannot write to stdout: {e}")))
        }
    }
}

fn cmd_build(args: BuildArgs) -> Result<(), CliError> {
    require_even_n(args.n)?;
    let at_q = args
        .at_q
        .as_deref()
        .map(|t| parse_q(t, false))
        .transpose()?;
    let doc = build_document(args.n, args.object, args.mode, &at_q)?;
    emit(&doc, args.format, &args.out)
}

fn cmd_export_eval(args: ExportEvalArgs) -> Result<(), CliError> {
    require_even_n(args.n)?;
    let at_q = Some(parse_q(&args.at_q, true)?);
    let doc = build_document(args.n, args.object, BuildMode::ClosedForm, &at_q)?;
    emit(&doc, args.format, &args.out)
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    require_even_n(args.n)?;
    let checks: Vec<Check> = if args.checks.is_empty() {
        Check::ALL.to_vec()
    } else {
        args.checks
            .iter()
            .map(|name| Check::from_name(name.trim()).map_err(|e| CliError::Usage(e.to_string())))
            .collect::<Result<_, _>>()?
    };
    let mode = match args.at_q.as_deref() {
        Some(text) => Mode::NumericQ(parse_q(text, false)?),
        None => Mode::Symbolic,
    };
    // a numeric q must support every selected check before any work starts
    if let Mode::NumericQ(q) = &mode {
        for check in &checks {
            if check.needs_half_powers() && qlax_core::scalar::sqrt_rational(q).is_none() {
                return Err(CliError::Usage(format!(
                    "check `{}` substitutes s = q^(1/2); q = {q} is not a rational square",
                    check.name()
                )));
            }
        }
    }
    let threads = args.threads.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1)
    });
    if threads == 0 {
        return Err(CliError::Usage("--threads must be at least 1".into()));
    }
    let reports = run_checks(args.n, &checks, &mode, threads)?;
    let mut all_passed = true;
    for report in &reports {
        println!("{report}");
        if !report.passed() {
            all_passed = false;
        }
    }
    let passed = reports
        .iter()
        .filter(|r| r.passed() && r.applicable)
        .count();
    let skipped = reports.iter().filter(|r| !r.applicable).count();
    println!(
        "verify: n={} mode={} checks={} passed={} not-applicable={}",
        args.n,
        mode,
        reports.len(),
        passed,
        skipped
    );
    if all_passed {
        Ok(())
    } else {
        Err(CliError::CheckFailed)
    }
}
