//! Command-line front end.
//!
//! Exit codes: 0 success or PASS, 1 verification FAIL or expectation
//! mismatch, 2 usage or validation error.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use power_forge_core::construct::compute_k;
use power_forge_core::oracles::{scan_gamma_minus_pow2, scan_recurrence_powers, FermatVariant, SolutionList};
use power_forge_core::{
    construct, construct_integer, decompose_integer_power, decompose_rational_power,
    parse_rational, Integer, PowerSetInput, Rational, SelectionPolicy, Tracer,
};

use crate::error::CliError;
use crate::format::{
    Artifact, ExpectDoc, PowerQueryDoc, ReportDoc, SolutionListDoc, TraceDoc,
};
use crate::parallel;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "power-forge", version, about = "Polynomials with prescribed perfect-power values")]
struct Cli {
    /// Worker threads for scans (defaults to all cores).
    #[arg(long, global = true, env = "POWER_FORGE_WORKERS")]
    workers: Option<usize>,

    /// Write the JSON result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build f_S for a set of perfect powers.
    Construct(ConstructArgs),
    /// Scan an artifact's polynomial for perfect-power values.
    Verify(VerifyArgs),
    /// Print u, v, A, B, w and the identity checks at one point.
    Trace(TraceArgs),
    /// Run a bounded Diophantine search.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Decompose a value as a perfect power.
    Power(PowerArgs),
}

#[derive(Debug, Args)]
struct SetArgs {
    /// Comma-separated elements, e.g. "9/25,-8/27"; "" is the empty set.
    #[arg(long, allow_hyphen_values = true)]
    set: Option<String>,

    /// File of elements separated by commas or whitespace.
    #[arg(long, conflicts_with = "set")]
    set_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[command(flatten)]
    set: SetArgs,

    /// Use the integer construction g = prod (X - b)^2 + 1, h = (X - 1) g + 1.
    #[arg(long)]
    integer: bool,

    #[arg(long, default_value_t = SelectionPolicy::default().t_max)]
    t_max: u32,

    #[arg(long, default_value_t = SelectionPolicy::default().kappa_cap)]
    kappa_cap: u32,

    #[arg(long, default_value_t = SelectionPolicy::default().max_degree)]
    max_degree: usize,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    artifact: PathBuf,

    /// Height bound for rational artifacts, |x| bound for integer ones.
    #[arg(long, visible_alias = "bound")]
    height: u64,

    /// One status line per finished block on standard error.
    #[arg(long)]
    progress: bool,
}

#[derive(Debug, Args)]
struct TraceArgs {
    #[command(flatten)]
    set: SetArgs,

    #[arg(long, allow_hyphen_values = true)]
    x: String,

    /// Defaults to the k the construction would use.
    #[arg(long)]
    k: Option<u64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExpectMode {
    /// The known closed-form solution set of the equation.
    Paper,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FermatArg {
    /// A^4 + B^4 = C^n
    Cn,
    /// A^4 + B^4 = 2C^n
    #[value(name = "2cn")]
    TwoCn,
    /// a^2 + b^4 = c^n, n >= 4
    #[value(name = "24n")]
    Sig24n,
}

impl From<FermatArg> for FermatVariant {
    fn from(v: FermatArg) -> Self {
        match v {
            FermatArg::Cn => FermatVariant::CN,
            FermatArg::TwoCn => FermatVariant::TwoCN,
            FermatArg::Sig24n => FermatVariant::Sig24N,
        }
    }
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// X^2 + 1 = Y^n
    Lebesgue {
        #[arg(long = "x")]
        x_bound: u64,
        #[arg(long = "n")]
        n_max: u32,
        #[arg(long)]
        expect: Option<ExpectMode>,
    },
    /// X^m - Y^n = 1
    Catalan {
        #[arg(long)]
        base: u64,
        #[arg(long)]
        exp: u32,
        #[arg(long)]
        expect: Option<ExpectMode>,
    },
    /// Quartic equations with coprime A, B
    Fermat {
        #[arg(long)]
        variant: FermatArg,
        #[arg(long)]
        bound: u64,
        #[arg(long = "n")]
        n_max: u32,
        #[arg(long)]
        expect: Option<ExpectMode>,
    },
    /// Perfect powers in a alpha^t + b beta^t
    Recurrence {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_integer)]
        a: Integer,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_integer)]
        b: Integer,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_integer)]
        alpha: Integer,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_integer)]
        beta: Integer,
        #[arg(long, default_value_t = 64)]
        t_max: u32,
        #[arg(long)]
        expect: Option<ExpectMode>,
    },
    /// Perfect powers in gamma - 2^t
    Gamma {
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        #[arg(long, default_value_t = 64)]
        t_max: u32,
        #[arg(long)]
        expect: Option<ExpectMode>,
    },
}

#[derive(Debug, Args)]
struct PowerArgs {
    #[arg(allow_hyphen_values = true)]
    value: String,

    /// Require an integer and test membership in P_Z.
    #[arg(long)]
    integer: bool,
}

/// Parse arguments and run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.workers {
        Some(n) if n > 0 => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(CliError::Usage(format!("cannot start {n} workers: {e}"))),
        },
        Some(_) => Err(CliError::Usage("--workers must be positive".into())),
        None => dispatch(&cli),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            println!("{}", e.to_json());
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32, CliError> {
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Construct(args) => cmd_construct(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Trace(args) => cmd_trace(args, out),
        Command::Oracle { which } => cmd_oracle(which, out),
        Command::Power(args) => cmd_power(args, out),
    }
}

fn emit(json: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, format!("{json}\n")).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            println!("{json}");
            Ok(())
        }
    }
}

/// Prints to stdout when the JSON went to a file, to stderr otherwise.
fn summary_line(line: &str, out: Option<&Path>) {
    if out.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
}

fn parse_integer(text: &str) -> Result<Integer, String> {
    text.trim().parse().map_err(|_| format!("invalid integer {text:?}"))
}

fn parse_elements(text: &str) -> Result<Vec<Rational>, CliError> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| parse_rational(s).map_err(CliError::from))
        .collect()
}

impl SetArgs {
    fn elements(&self) -> Result<Vec<Rational>, CliError> {
        match (&self.set, &self.set_file) {
            (Some(text), None) => parse_elements(text),
            (None, Some(path)) => {
                let text = fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
                parse_elements(&text)
            }
            _ => Err(CliError::Usage("give exactly one of --set or --set-file".into())),
        }
    }
}

fn cmd_construct(args: &ConstructArgs, out: Option<&Path>) -> Result<i32, CliError> {
    let elements = args.set.elements()?;
    if args.integer {
        let set = PowerSetInput::integer(elements)?;
        let c = construct_integer(&set)?;
        summary_line(&degree_line(&c.f), out);
        emit(&Artifact::Integer(c).to_json(), out)?;
        return Ok(EXIT_OK);
    }
    let set = PowerSetInput::rational(elements)?;
    let policy = SelectionPolicy {
        t_max: args.t_max,
        kappa_cap: args.kappa_cap,
        max_degree: args.max_degree,
    };
    let art = construct(&set, policy)?;
    match &art.pipeline {
        Some(p) => summary_line(&format!("k = {}\nkappa = {}\ns = {}", p.k, p.kappa, p.s), out),
        None => summary_line("empty set: f_S = 2", out),
    }
    summary_line(&degree_line(&art.f_s), out);
    emit(&Artifact::Rational(art).to_json(), out)?;
    Ok(EXIT_OK)
}

fn degree_line(f: &power_forge_core::IntPoly) -> String {
    format!(
        "degree = {}\nmax_coeff_bits = {}",
        f.degree().unwrap_or(0),
        f.max_coeff_bits()
    )
}

fn cmd_verify(args: &VerifyArgs, out: Option<&Path>) -> Result<i32, CliError> {
    if args.height == 0 {
        return Err(CliError::Usage("--height must be positive".into()));
    }
    let text = fs::read_to_string(&args.artifact).map_err(|source| CliError::Io {
        path: args.artifact.display().to_string(),
        source,
    })?;
    let artifact = Artifact::from_json(&text)?;
    let set = artifact.input_set()?;
    let progress = |i: u64, n: u64, hits: usize| eprintln!("block {i}/{n}: {hits} hits");
    let progress: Option<parallel::Progress<'_>> = args.progress.then_some(&progress);
    let report = match &artifact {
        Artifact::Rational(art) => parallel::verify_construction(art, &set, args.height, progress),
        Artifact::Integer(c) => {
            parallel::verify_integer_construction(&c.f, &set, args.height, progress)
        }
    };
    let doc = ReportDoc::from(&report);
    emit(&serde_json::to_string_pretty(&doc).expect("report serializes"), out)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_trace(args: &TraceArgs, out: Option<&Path>) -> Result<i32, CliError> {
    let set = PowerSetInput::rational(args.set.elements()?)?;
    let x = parse_rational(&args.x)?;
    let k = match args.k {
        Some(k) => k,
        None => u64::try_from(compute_k(&set)?)
            .map_err(|_| CliError::Usage("k does not fit in 64 bits".into()))?,
    };
    let tracer = Tracer::new(&set, k)?;
    let rec = tracer.record(&x);
    let doc = TraceDoc::new(&rec, k);
    emit(&serde_json::to_string_pretty(&doc).expect("trace serializes"), out)?;
    if rec.all_ok() {
        Ok(EXIT_OK)
    } else {
        eprintln!("{}", power_forge_core::Error::InvariantViolation(Box::new(rec)));
        Ok(EXIT_FAIL)
    }
}

fn cmd_oracle(which: &OracleCommand, out: Option<&Path>) -> Result<i32, CliError> {
    let (list, expect): (SolutionList, _) = match which {
        OracleCommand::Lebesgue { x_bound, n_max, expect } => {
            (parallel::search_lebesgue(*x_bound, *n_max)?, expect)
        }
        OracleCommand::Catalan { base, exp, expect } => (parallel::search_catalan(*base, *exp)?, expect),
        OracleCommand::Fermat {
            variant,
            bound,
            n_max,
            expect,
        } => (
            parallel::search_fermat_quartic(*bound, *n_max, (*variant).into())?,
            expect,
        ),
        OracleCommand::Recurrence {
            a,
            b,
            alpha,
            beta,
            t_max,
            expect,
        } => (scan_recurrence_powers(a, b, alpha, beta, *t_max)?, expect),
        OracleCommand::Gamma { gamma, t_max, expect } => {
            (scan_gamma_minus_pow2(&parse_rational(gamma)?, *t_max)?, expect)
        }
    };
    let mut doc = SolutionListDoc::from(&list);
    let mut code = if doc.resubstitution_ok { EXIT_OK } else { EXIT_FAIL };
    if let Some(ExpectMode::Paper) = expect {
        let Some(expected) = list.stated_solutions() else {
            return Err(CliError::Usage(format!(
                "no stated solution set to compare against for {}",
                list.equation.tag()
            )));
        };
        let matches = expected == list.tuples();
        if !matches {
            code = EXIT_FAIL;
        }
        doc.expect = Some(ExpectDoc {
            mode: "paper".into(),
            expected: expected
                .iter()
                .map(|t| t.iter().map(ToString::to_string).collect())
                .collect(),
            matches,
        });
    }
    emit(&serde_json::to_string_pretty(&doc).expect("solutions serialize"), out)?;
    Ok(code)
}

fn cmd_power(args: &PowerArgs, out: Option<&Path>) -> Result<i32, CliError> {
    let q = parse_rational(&args.value)?;
    let decomposition = if args.integer {
        if !q.is_integer() {
            return Err(CliError::Usage(format!("{q} is not an integer")));
        }
        decompose_integer_power(q.numer())
    } else {
        decompose_rational_power(&q)
    };
    let doc = PowerQueryDoc {
        value: q.to_string(),
        decomposition: decomposition.as_ref().map(Into::into),
    };
    emit(&serde_json::to_string(&doc).expect("power serializes"), out)?;
    Ok(EXIT_OK)
}
