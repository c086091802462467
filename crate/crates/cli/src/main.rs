use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use grothlab::convex::{interval_union, supports_by_enumeration};
use grothlab::pipedream::count_pipe_dreams;
use grothlab::poly::{grothendieck_rec, poly_from_pipe_dreams, schubert_rec};
use grothlab::raise::{raise_weight, RaiseError};
use grothlab::sweep::{run_job, Claim, Filter, VerificationJob};
use grothlab::{max_weight_formula, pipe_dreams, trace, Error, Permutation, PipeDream};

const EXIT_CLAIM: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_INVARIANT: u8 = 4;
const EXIT_RESOURCE: u8 = 5;

#[derive(Parser)]
#[command(name = "grothlab", version, about = "Schubert and Grothendieck polynomials from pipe dreams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Schubert or Grothendieck polynomial of a permutation.
    Poly(PolyArgs),
    /// List the support of the Grothendieck (or Schubert) polynomial.
    Support(SupportArgs),
    /// List or count the pipe dreams of a permutation.
    Pipedreams(PipedreamArgs),
    /// Raise a pipe dream's weight by one in a chosen row.
    Raise(RaiseArgs),
    /// Run a verification sweep.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    Pipedream,
    Recursion,
}

#[derive(Args)]
struct PolyArgs {
    perm: Permutation,
    #[arg(long, conflicts_with = "grothendieck")]
    schubert: bool,
    /// The default.
    #[arg(long)]
    grothendieck: bool,
    #[arg(long, value_enum, default_value = "pipedream")]
    engine: Engine,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SupportArgs {
    perm: Permutation,
    /// Compute from the interval-union formula instead of enumeration (fireworks only).
    #[arg(long)]
    formula: bool,
    /// Support of the Schubert polynomial instead.
    #[arg(long, conflicts_with = "formula")]
    schubert: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PipedreamArgs {
    perm: Permutation,
    /// Print only the number of pipe dreams.
    #[arg(long)]
    count: bool,
    /// Only reduced pipe dreams.
    #[arg(long)]
    reduced: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RaiseArgs {
    #[arg(long)]
    perm: Permutation,
    #[arg(long)]
    row: usize,
    /// Pipe dream JSON; read from stdin when absent.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    claim: Claim,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "all")]
    filter: Filter,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; overrides GROTHLAB_THREADS.
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    fail_fast: bool,
    #[arg(long)]
    json: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::MalformedPermutation { .. } => EXIT_USAGE,
            Error::TooLarge { .. } => EXIT_RESOURCE,
            _ => EXIT_PRECONDITION,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(EXIT_USAGE, e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn to_json<T: serde::Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("values serialize")
}

fn cmd_poly(args: PolyArgs, out: &mut impl Write) -> CmdResult {
    let w = &args.perm;
    let f = match (args.schubert, args.engine) {
        (true, Engine::Pipedream) => poly_from_pipe_dreams(w, true),
        (false, Engine::Pipedream) => poly_from_pipe_dreams(w, false),
        (true, Engine::Recursion) => schubert_rec(w),
        (false, Engine::Recursion) => grothendieck_rec(w),
    };
    if args.json {
        writeln!(out, "{}", to_json(&f))?;
    } else {
        writeln!(out, "{f}")?;
    }
    Ok(())
}

fn cmd_support(args: SupportArgs, out: &mut impl Write) -> CmdResult {
    let w = &args.perm;
    let points = if args.formula {
        let top = max_weight_formula(w)?;
        interval_union(&supports_by_enumeration(w).schubert, &top)?
    } else {
        let s = supports_by_enumeration(w);
        if args.schubert {
            s.schubert
        } else {
            s.grothendieck
        }
    };
    if args.json {
        writeln!(out, "{}", to_json(&points.iter().collect::<Vec<_>>()))?;
    } else {
        for p in &points {
            writeln!(out, "{p}")?;
        }
    }
    Ok(())
}

fn cmd_pipedreams(args: PipedreamArgs, out: &mut impl Write) -> CmdResult {
    let w = &args.perm;
    if args.count && !args.reduced {
        let k = count_pipe_dreams(w);
        if args.json {
            writeln!(out, "{}", json!({ "perm": w, "count": k }))?;
        } else {
            writeln!(out, "{k}")?;
        }
        return Ok(());
    }
    let dreams: Vec<PipeDream> = pipe_dreams(w).filter(|p| !args.reduced || trace(p).reduced).collect();
    if args.count {
        if args.json {
            writeln!(out, "{}", json!({ "perm": w, "count": dreams.len() }))?;
        } else {
            writeln!(out, "{}", dreams.len())?;
        }
    } else if args.json {
        writeln!(out, "{}", to_json(&dreams))?;
    } else {
        for (k, p) in dreams.iter().enumerate() {
            if k > 0 {
                writeln!(out)?;
            }
            write!(out, "{}", p.to_ascii())?;
        }
    }
    Ok(())
}

fn cmd_raise(args: RaiseArgs, out: &mut impl Write) -> CmdResult {
    let text = match &args.file {
        Some(path) => std::fs::read_to_string(path)?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    let p: PipeDream =
        serde_json::from_str(&text).map_err(|e| Failure::new(EXIT_USAGE, format!("bad pipe dream JSON: {e}")))?;
    match raise_weight(&p, &args.perm, args.row) {
        Ok((_, tr)) => {
            writeln!(out, "{}", to_json(&tr))?;
            Ok(())
        }
        Err(RaiseError::Precondition(m)) => Err(Failure::new(EXIT_PRECONDITION, m)),
        Err(RaiseError::InvariantViolation { message, trace }) => {
            writeln!(out, "{}", to_json(&trace))?;
            Err(Failure::new(EXIT_INVARIANT, format!("internal invariant violated: {message}")))
        }
    }
}

fn threads_from_env() -> Result<Option<usize>, Failure> {
    match std::env::var("GROTHLAB_THREADS") {
        Ok(v) => v
            .parse()
            .map(Some)
            .map_err(|_| Failure::new(EXIT_USAGE, format!("GROTHLAB_THREADS={v:?} is not a thread count"))),
        Err(_) => Ok(None),
    }
}

fn cmd_verify(args: VerifyArgs, out: &mut impl Write) -> CmdResult {
    let job = VerificationJob {
        claim: args.claim,
        n: args.n,
        filter: args.filter,
        seed: args.seed,
        threads: match args.threads {
            Some(t) => Some(t),
            None => threads_from_env()?,
        },
        fail_fast: args.fail_fast,
    };
    let json = args.json;
    let mut write_err = None;
    let summary = run_job(&job, |r| {
        if !json && !r.ok {
            if let Err(e) = writeln!(out, "FAIL {} {}", r.instance, r.detail) {
                write_err.get_or_insert(e);
            }
        }
    })?;
    if let Some(e) = write_err {
        return Err(e.into());
    }
    if json {
        writeln!(out, "{}", to_json(&summary))?;
    } else {
        writeln!(out, "{}", summary.line())?;
    }
    if summary.invariant_violation {
        Err(Failure::new(EXIT_INVARIANT, "internal invariant violated during the sweep"))
    } else if !summary.ok() {
        Err(Failure::new(EXIT_CLAIM, summary.line()))
    } else {
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Poly(a) => cmd_poly(a, &mut out),
        Command::Support(a) => cmd_support(a, &mut out),
        Command::Pipedreams(a) => cmd_pipedreams(a, &mut out),
        Command::Raise(a) => cmd_raise(a, &mut out),
        Command::Verify(a) => cmd_verify(a, &mut out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
