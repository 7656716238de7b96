use clap::{Parser, Subcommand};
use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use e8kit::{cache, emit, ledger, suites};

#[derive(Parser)]
#[command(name = "e8kit", version, about = "Exact verification suites for the σ, σ′ fixed subalgebras of e8")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named check suite and write its JSON report.
    Suite {
        /// axioms, jacobi, ledger, triality, kappa-mu, phi-generators,
        /// w-variety, orbits, compact, decomposition or all
        name: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Size of the worker pool (results do not depend on it).
        #[arg(long)]
        threads: Option<usize>,
        /// Report file; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record per-check wall-clock times (makes reports non-reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Write sparse structure constants of a subalgebra.
    Emit {
        /// e7, e8, fixed-56, spin8-centralizer, f4-commutant or compact-e8
        selector: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the dimension ledger.
    Ledger {
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
}

const USAGE: u8 = 2;

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("e8kit: {msg}");
    ExitCode::from(USAGE)
}

enum Sink {
    Stdout,
    File(PathBuf, File),
}

impl Sink {
    fn open(out: Option<PathBuf>) -> Result<Sink, ExitCode> {
        match out {
            None => Ok(Sink::Stdout),
            Some(p) => match File::create(&p) {
                Ok(f) => Ok(Sink::File(p, f)),
                Err(e) => Err(usage_error(format!("cannot write {}: {e}", p.display()))),
            },
        }
    }

    fn write(self, text: &str) -> Result<(), ExitCode> {
        let res = match self {
            Sink::Stdout => std::io::stdout().write_all(text.as_bytes()),
            Sink::File(p, mut f) => f.write_all(text.as_bytes()).map_err(|e| std::io::Error::other(format!("{}: {e}", p.display()))),
        };
        res.map_err(|e| usage_error(format!("write failed: {e}")))
    }
}

fn set_threads(threads: Option<usize>) -> Result<(), ExitCode> {
    if let Some(n) = threads {
        if n == 0 {
            return Err(usage_error("--threads must be positive"));
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(usage_error)?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Command::Suite { name, seed, threads, out, timings } => {
            if !suites::SUITES.contains(&name.as_str()) {
                return Err(usage_error(format!("unknown suite {name:?}; expected one of {}", suites::SUITES.join(", "))));
            }
            set_threads(threads)?;
            let sink = Sink::open(out)?;
            if suites::needs_e8(&name) {
                cache::ensure_e8();
            }
            let report = suites::run_suite(&name, seed, timings).expect("name checked");
            sink.write(&report.to_json())?;
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Emit { selector, out } => {
            if !emit::SELECTORS.contains(&selector.as_str()) {
                return Err(usage_error(format!("unknown selector {selector:?}; expected one of {}", emit::SELECTORS.join(", "))));
            }
            let sink = Sink::open(Some(out))?;
            if emit::needs_e8(&selector) {
                cache::ensure_e8();
            }
            match emit::emit(&selector).expect("selector checked") {
                Ok(e) => {
                    sink.write(&e.to_json())?;
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("e8kit: {e}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Ledger { out, threads } => {
            set_threads(threads)?;
            let sink = Sink::open(out)?;
            cache::ensure_e8();
            let l = ledger::compute_ledger();
            sink.write(&l.to_json())?;
            Ok(if l.entries.iter().all(|e| e.expected == e.computed) { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    run(cli).unwrap_or_else(|c| c)
}
