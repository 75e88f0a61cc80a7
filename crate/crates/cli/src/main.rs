//! `adideal`: enumerate ad-nilpotent ideals of type A_n, their move classes,
//! orbit partitions and enumerative tables.
//!
//! Exit status is 0 on success, 1 when a checked invariant is falsified and
//! 2 on a usage or input error.

mod commands;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use adideal::{MoveKind, PrimeField, ORACLE_PRIME};

use crate::render::Format;

#[derive(Parser, Debug)]
#[command(name = "adideal", version, about = "Ad-nilpotent ideals of type A_n")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Seed for the random-matrix oracle.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Random matrices drawn per ideal by the oracle.
    #[arg(long, default_value_t = 5, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    /// Worker threads; 0 uses one per core. Output does not depend on it.
    #[arg(long, default_value_t = 0, global = true)]
    pub jobs: usize,
    /// Prime modulus for the oracle's exact arithmetic (below 2^32).
    #[arg(long, default_value_t = ORACLE_PRIME, global = true)]
    pub prime: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every ideal of A_n with its ballot word and orbit partition.
    Enumerate { n: usize },
    /// Equivalence classes under a move system, compared with the fibers of
    /// the statistic the moves preserve.
    Classes {
        n: usize,
        #[arg(long, value_enum, default_value_t = Moves::Basic)]
        moves: Moves,
        /// Also list the members of each class.
        #[arg(long)]
        members: bool,
    },
    /// Orbit partition of an ideal, its characteristic sequences and the
    /// random-matrix check.
    Orbit {
        ideal: String,
        #[arg(long)]
        rank: usize,
    },
    /// Basic moves from an ideal to a parabolic nilradical, one per line.
    Normalize {
        ideal: String,
        #[arg(long)]
        rank: usize,
    },
    /// Convert between an ideal literal and its ballot word.
    Convert {
        /// An ideal such as `[1,1],[3,3]` (or `-`), or a ballot word over {0,1}.
        input: String,
        /// Required for ideal input.
        #[arg(long)]
        rank: Option<usize>,
    },
    /// N_lambda for each rank in an inclusive range such as `3..6`.
    Table1 { ranks: String },
    /// Ideals counted by index (rows) and number of minimal roots (columns).
    Table2 { n: usize },
    /// Kreweras numbers against the closed formula, and Narayana numbers.
    Kreweras { n: usize },
    /// Unit interval order and indifference graph of an ideal.
    Poset {
        ideal: String,
        #[arg(long)]
        rank: usize,
    },
    /// Run the full invariant suite for every rank up to n.
    Verify { n: usize },
    /// Joint tally of the orbit partition and the Kreweras partition.
    Pairs { n: usize },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Moves {
    Basic,
    Inner,
    Outer,
}

impl From<Moves> for MoveKind {
    fn from(m: Moves) -> Self {
        match m {
            Moves::Basic => MoveKind::Basic,
            Moves::Inner => MoveKind::Inner,
            Moves::Outer => MoveKind::Outer,
        }
    }
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Falsified(String),
}

impl From<adideal::Error> for Failure {
    fn from(e: adideal::Error) -> Self {
        match e {
            adideal::Error::Inconsistent(_) | adideal::Error::OracleAnomaly(..) => Failure::Falsified(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<adideal::verify::Falsified> for Failure {
    fn from(f: adideal::verify::Falsified) -> Self {
        Failure::Falsified(f.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if cli.global.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.global.jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let outcome = PrimeField::new(cli.global.prime)
        .map_err(Failure::from)
        .and_then(|field| run(&cli.command, &cli.global, field));
    match outcome {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `adideal --help` for usage");
            ExitCode::from(2)
        }
        Err(Failure::Falsified(msg)) => {
            eprintln!("FALSIFIED: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: &Command, opts: &GlobalOpts, field: PrimeField) -> Result<String, Failure> {
    let fmt = opts.format;
    let oracle = commands::OracleOpts {
        trials: opts.trials as usize,
        seed: opts.seed,
        field,
    };
    let report = match command {
        Command::Enumerate { n } => commands::enumerate(*n)?,
        Command::Classes { n, moves, members } => commands::classes(*n, (*moves).into(), *members)?,
        Command::Orbit { ideal, rank } => commands::orbit(ideal, *rank, &oracle)?,
        Command::Normalize { ideal, rank } => commands::normalize(ideal, *rank)?,
        Command::Convert { input, rank } => commands::convert(input, *rank)?,
        Command::Table1 { ranks } => commands::table1(ranks)?,
        Command::Table2 { n } => commands::table2(*n)?,
        Command::Kreweras { n } => commands::kreweras(*n)?,
        Command::Poset { ideal, rank } => commands::poset(ideal, *rank)?,
        Command::Verify { n } => commands::verify(*n, &oracle)?,
        Command::Pairs { n } => commands::pairs(*n)?,
    };
    let rendered = report.render(fmt).map_err(Failure::Usage)?;
    match report.falsified {
        Some(msg) => {
            // partial output first, then the witness on stderr
            print!("{rendered}");
            Err(Failure::Falsified(msg))
        }
        None => Ok(rendered),
    }
}
