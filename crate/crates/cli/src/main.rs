use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use wachs_core::verify::{self, CheckResult, Limits, Report, RunOptions, Status, CONJECTURES, THEOREMS};
use wachs_core::wachs::{rank_lw, wachs_poset, WachsElement};
use wachs_core::weak::{wachs_weak_poset, Side, WeakElement};
use wachs_core::{Error, Kind, Permutation, SignedPermutation};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "wachs", version, about = "Wachs permutations under Bruhat and weak orders")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Common {
    /// Allow sizes beyond the desk-scale defaults (A 8, B 6, lattice sweep 9).
    #[arg(long, global = true)]
    unsafe_large: bool,
    /// Record per-check wall-clock time; otherwise reported as 0.
    #[arg(long, global = true)]
    timings: bool,
}

impl Common {
    fn options(self) -> RunOptions {
        RunOptions { limits: if self.unsafe_large { Limits::UNSAFE } else { Limits::DEFAULT }, timings: self.timings }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List W(S_n) or W(B_n) with codes and ℓ_W.
    Enumerate {
        kind: Kind,
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Write the Hasse diagram as Graphviz source.
    Hasse {
        kind: Kind,
        n: usize,
        #[arg(long, value_enum, default_value = "bruhat")]
        order: OrderArg,
        #[arg(long)]
        dot: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Run a theorem suite or a conjecture sweep.
    Check {
        #[arg(value_enum)]
        what: CheckKind,
        id: String,
        #[arg(long)]
        max_n: Option<usize>,
        /// Also write the results as a JSON report.
        #[arg(long)]
        json: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Run every check at its default range and write a JSON report.
    Report {
        #[arg(long)]
        json: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum CheckKind {
    Theorem,
    Conjecture,
}

#[derive(ValueEnum, Clone, Copy)]
enum OrderArg {
    Bruhat,
    #[value(name = "weakR")]
    WeakR,
    #[value(name = "weakL")]
    WeakL,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(threads) = std::env::var("WACHS_THREADS") {
        match threads.parse::<usize>() {
            Ok(k) if k > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
            }
            _ => {
                eprintln!("WACHS_THREADS must be a positive integer, got {threads:?}");
                return ExitCode::from(EXIT_USAGE);
            }
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            match err.downcast_ref::<Error>() {
                Some(Error::CapExceeded { .. }) => ExitCode::from(EXIT_CAP),
                Some(Error::Unsupported(_)) | Some(Error::Parse { .. }) => ExitCode::from(EXIT_USAGE),
                _ => ExitCode::from(EXIT_FAIL),
            }
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Enumerate { kind, n, common } => {
            check_size(kind, n, common)?;
            let lines = match kind {
                Kind::A => listing::<Permutation>(n)?,
                Kind::B => listing::<SignedPermutation>(n)?,
            };
            for line in lines {
                println!("{line}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Hasse { kind, n, order, dot, common } => {
            check_size(kind, n, common)?;
            let poset = match kind {
                Kind::A => hasse::<Permutation>(n, order)?,
                Kind::B => hasse::<SignedPermutation>(n, order)?,
            };
            std::fs::write(&dot, poset.to_dot()).with_context(|| format!("writing {}", dot.display()))?;
            println!("{} elements, {} covers -> {}", poset.len(), poset.cover_count(), dot.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { what, id, max_n, json, common } => {
            let known = match what {
                CheckKind::Theorem => THEOREMS,
                CheckKind::Conjecture => CONJECTURES,
            };
            if !known.contains(&id.as_str()) {
                eprintln!("unknown id {id:?}; expected one of: {}", known.join(", "));
                return Ok(ExitCode::from(EXIT_USAGE));
            }
            let opts = common.options();
            let max_n = max_n.unwrap_or_else(|| verify::default_max_n(&id, opts.limits));
            let report = Report::new(verify::run_check(&id, max_n, opts)?);
            print_results(&report.checks);
            if let Some(path) = json {
                write_report(&report, &path)?;
            }
            Ok(exit_for(&report))
        }
        Command::Report { json, common } => {
            let report = verify::full_report(common.options())?;
            print_results(&report.checks);
            write_report(&report, &json)?;
            Ok(exit_for(&report))
        }
    }
}

fn check_size(kind: Kind, n: usize, common: Common) -> anyhow::Result<()> {
    let limits = common.options().limits;
    let cap = match kind {
        Kind::A => limits.a,
        Kind::B => limits.b,
    };
    if n > cap {
        return Err(Error::CapExceeded { kind: kind.letter(), n, cap }.into());
    }
    Ok(())
}

fn listing<W: WachsElement>(n: usize) -> anyhow::Result<Vec<String>> {
    wachs_core::wachs::enumerate_wachs::<W>(n)?
        .iter()
        .map(|v| Ok(format!("{v}\t{}\t{}", v.encode()?, rank_lw(v)?)))
        .collect()
}

fn hasse<W: WachsElement + WeakElement>(n: usize, order: OrderArg) -> anyhow::Result<wachs_core::poset::FinitePoset> {
    let (_, poset) = match order {
        OrderArg::Bruhat => wachs_poset::<W>(n)?,
        OrderArg::WeakR => wachs_weak_poset::<W>(n, Side::Right)?,
        OrderArg::WeakL => wachs_weak_poset::<W>(n, Side::Left)?,
    };
    Ok(poset)
}

fn print_results(results: &[CheckResult]) {
    for r in results {
        let status = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        match &r.witness {
            Some(w) => println!("{status} {} {}{}: {w}", r.id, r.kind, r.n),
            None => println!("{status} {} {}{}", r.id, r.kind, r.n),
        }
    }
}

fn write_report(report: &Report, path: &PathBuf) -> anyhow::Result<()> {
    std::fs::write(path, report.to_json()).with_context(|| format!("writing {}", path.display()))
}

fn exit_for(report: &Report) -> ExitCode {
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}
