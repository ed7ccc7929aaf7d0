use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

mod commands;

/// One comma-separated argument. The alias keeps clap from treating the field
/// as a repeated argument, which it does for a literal `Vec`.
type List = Vec<BigInt>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "numsg", version, about = "Exact computations on numerical semigroups")]
struct Cli {
    /// Output format for data written to stdout.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,

    /// Largest Frobenius number that gap enumeration will attempt.
    #[arg(
        long,
        env = "NUMSG_ENUMERATION_CAP",
        default_value_t = numsg::DEFAULT_ENUMERATION_CAP,
        value_parser = clap::value_parser!(u64).range(1..),
        global = true
    )]
    cap: u64,

    #[command(subcommand)]
    command: Command,
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, Copy)]
pub struct CliConfig {
    pub output_format: OutputFormat,
    pub enumeration_cap: u64,
    pub seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the gaps, genus and Frobenius number.
    Gaps {
        #[arg(value_parser = parse_list)]
        gens: List,
    },
    /// Apéry set with respect to an element t of the semigroup.
    Apery {
        #[arg(value_parser = parse_list)]
        gens: List,
        #[arg(long)]
        t: u64,
    },
    /// Frobenius number (-1 when the semigroup is all of N).
    Frobenius {
        #[arg(value_parser = parse_list)]
        gens: List,
    },
    /// Number of gaps.
    Genus {
        #[arg(value_parser = parse_list)]
        gens: List,
    },
    /// Hilbert series as a numerator over 1 - x^t.
    Hilbert {
        #[arg(value_parser = parse_list)]
        gens: List,
        #[arg(long)]
        t: u64,
    },
    /// Smoothness test and c values of an ordered sequence.
    Analyze {
        #[arg(value_parser = parse_list)]
        seq: List,
    },
    /// Build the compound sequence G(A, B).
    Compound {
        #[arg(long, value_parser = parse_list)]
        a: List,
        #[arg(long, value_parser = parse_list)]
        b: List,
    },
    /// Recover (A, B) if the sequence is compound.
    Detect {
        #[arg(value_parser = parse_list)]
        seq: List,
    },
    /// Reverse the first j+1 entries of a compound sequence.
    Rho {
        #[arg(value_parser = parse_list)]
        seq: List,
        #[arg(long)]
        j: usize,
    },
    /// Digit representation of n over a smooth sequence.
    Represent {
        #[arg(value_parser = parse_list)]
        seq: List,
        #[arg(long, allow_negative_numbers = true)]
        n: BigInt,
    },
    /// Sylvester sums over the gaps of a free semigroup.
    Sylvester {
        #[arg(value_parser = parse_list)]
        seq: List,
        /// Extra exponents, evaluated by enumeration beyond m = 2.
        #[arg(long)]
        m: Vec<u32>,
    },
    /// Alternating Sylvester sums over the gaps of a free semigroup.
    Alternating {
        #[arg(value_parser = parse_list)]
        seq: List,
        #[arg(long)]
        m: Vec<u32>,
    },
    /// Alternating sum T_m(a, b) by recurrence (b odd).
    Wangwang {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        m: u32,
    },
    /// Randomized property suite with a fixed seed.
    Verify {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Wall time of closed forms against gap enumeration.
    Bench {
        #[arg(value_parser = parse_list)]
        seq: List,
    },
}

fn parse_list(s: &str) -> Result<List, String> {
    s.split(',')
        .map(|part| {
            let part = part.trim();
            match part.parse::<BigInt>() {
                Ok(v) if v > BigInt::from(0) => Ok(v),
                Ok(_) => Err(format!("'{part}' is not a positive integer")),
                Err(_) => Err(format!("'{part}' is not an integer")),
            }
        })
        .collect()
}

/// Parses `argv` and runs the command, returning the process exit code.
pub fn run<I, T>(argv: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("invalid arguments");
            eprintln!("numsg: {}", line.trim_start_matches("error: "));
            return ExitCode::from(1);
        }
    };
    let config = CliConfig {
        output_format: cli.format,
        enumeration_cap: cli.cap,
        seed: match &cli.command {
            Command::Verify { seed, .. } => *seed,
            _ => None,
        },
    };
    match commands::execute(&cli.command, &config) {
        Ok(commands::Status::Ok) => ExitCode::SUCCESS,
        Ok(commands::Status::CheckFailed) => ExitCode::from(2),
        Err(e) => {
            eprintln!("numsg: {e}");
            ExitCode::from(if e.is_internal() { 2 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    run(std::env::args_os())
}
