//! `ucharmap`: character tables and verification reports for `U(n, F_{q^2})`.

mod commands;
mod render;
mod verify;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use unitary_charmap::bruteforce::BruteConfig;
use unitary_charmap::charmap::prime_power;
use unitary_charmap::Error;

use commands::{Ctx, Decomposition};
use render::Format;
use verify::Check;

#[derive(Parser, Debug)]
#[command(name = "ucharmap", version, about = "Exact character tables of the finite unitary groups U(n, F_{q^2})")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Debug)]
struct Opts {
    /// Rank of the unitary group.
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,
    /// Prime power; the group is defined over F_{q^2}.
    #[arg(long, global = true, default_value_t = 2)]
    q: u64,
    /// Size for decompositions and sums; defaults to n.
    #[arg(long, global = true)]
    m: Option<usize>,
    /// Symplectic rank for sp-induction.
    #[arg(long, global = true)]
    r: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Compute symplectic decompositions for even q as well.
    #[arg(long, global = true)]
    allow_even_q: bool,
    /// Largest group the brute-force enumerator will build.
    #[arg(long, global = true, default_value_t = 100_000)]
    max_group_order: u128,
    /// Allow brute-force enumeration of U(3, F_4).
    #[arg(long, global = true)]
    extended: bool,
    /// Use all cores; the default is a single thread.
    #[arg(long, global = true)]
    parallel: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Frobenius orbits on the character and element sides, with counts d_r.
    Orbits,
    /// Conjugacy classes with centralizer orders and sizes.
    Classes,
    /// The full character table.
    Chartable,
    /// Degrees of the irreducible characters.
    Degrees,
    /// Decompose a standard character into irreducibles.
    Decompose {
        #[arg(value_enum)]
        which: Decomposition,
    },
    /// Run consistency checks, printing PASS or FAIL for each.
    Verify {
        #[arg(value_enum)]
        check: Check,
    },
    /// Enumerate the group explicitly and report classes and indicators.
    Bruteforce,
}

fn config_error(e: &Error) -> bool {
    matches!(
        e,
        Error::InvalidArgument(_)
            | Error::InvalidPartition(_)
            | Error::EvenQ(_)
            | Error::BoundExceeded { .. }
            | Error::Unsupported(_)
    )
}

fn fail(code: u8, kind: &str, message: &str) -> ExitCode {
    let err = serde_json::json!({"schema": 1, "error": kind, "message": message});
    eprintln!("{err}");
    ExitCode::from(code)
}

fn validate(opts: &Opts) -> Result<(), String> {
    if opts.n == 0 {
        return Err("n must be at least 1".into());
    }
    if prime_power(opts.q).is_none() {
        return Err(format!("q = {} is not a prime power", opts.q));
    }
    if opts.m == Some(0) {
        return Err("m must be at least 1".into());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(2, "usage", e.to_string().trim()),
    };
    if let Err(msg) = validate(&cli.opts) {
        return fail(2, "invalid-config", &msg);
    }
    let o = &cli.opts;
    if !o.parallel {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(1).build_global();
    }
    let ctx = Ctx {
        n: o.n,
        q: o.q,
        m: o.m,
        r: o.r,
        allow_even_q: o.allow_even_q,
        parallel: o.parallel,
        brute: BruteConfig { max_group_order: o.max_group_order, extended: o.extended },
    };
    let start = Instant::now();
    let result = match cli.command {
        Command::Orbits => commands::orbits(&ctx).map(|d| (d, true)),
        Command::Classes => commands::classes(&ctx).map(|d| (d, true)),
        Command::Chartable => commands::chartable(&ctx).map(|d| (d, true)),
        Command::Degrees => commands::degrees(&ctx).map(|d| (d, true)),
        Command::Decompose { which } => commands::decompose(&ctx, which).map(|d| (d, true)),
        Command::Verify { check } => verify::verify(&ctx, check),
        Command::Bruteforce => commands::bruteforce(&ctx).map(|d| (d, true)),
    };
    match result {
        Ok((doc, pass)) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(doc.render(o.format).as_bytes());
            let _ = out.flush();
            if matches!(cli.command, Command::Verify { .. }) {
                eprintln!("{}", serde_json::json!({"elapsed_ms": start.elapsed().as_secs_f64() * 1e3}));
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) if config_error(&e) => fail(2, "invalid-config", &e.to_string()),
        Err(e) => fail(1, "computation", &e.to_string()),
    }
}
