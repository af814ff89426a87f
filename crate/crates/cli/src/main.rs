//! `maxplus`: command-line front end for exact max-plus matrix analysis.
//!
//! Exit codes: 0 on success, 2 when an input cannot be read or parsed,
//! 3 when a matrix violates a precondition of the requested command, 1 for
//! internal consistency failures. Verdicts are reported in the output, never
//! through the exit code.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use maxplus::io::parse_matrix;
use maxplus::ranks::DEFAULT_BRUTE_CAP;
use maxplus::report::{
    powers_report, ranks_report, semigroup_report, spectral_report, urank_report,
    StructuredReport,
};
use maxplus::semigroup::{default_oracle_length, DEFAULT_PRODUCT_BUDGET};
use maxplus::spectral::default_max_steps;
use maxplus::{Error, TropMatrix};

#[derive(Parser, Debug)]
#[command(name = "maxplus", version, about = "Exact max-plus matrix analysis")]
struct Cli {
    /// Print the report as JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Matrix file, or `-` for standard input.
    file: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Maximum cycle mean, critical graph, cyclicities and eigenvectors.
    Spectral(Input),
    /// Column, row, tropical and symmetrized ranks, and the permanent.
    Ranks {
        #[command(flatten)]
        input: Input,
        /// Largest submatrix size for the enumerated ranks.
        #[arg(long, default_value_t = DEFAULT_BRUTE_CAP)]
        brute_max: usize,
    },
    /// Ultimate rank from the critical graph.
    Urank {
        #[command(flatten)]
        input: Input,
        /// Cross-check against the ranks along the power sequence.
        #[arg(long)]
        oracle: bool,
        /// Step limit for the oracle (default n^4 + n^2).
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// Decide whether every product of the generators has full ultimate rank.
    Semigroup {
        /// One matrix file per generator (`-` for standard input).
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Also enumerate all products up to length L (`--oracle=L`, default n + 1).
        #[arg(long, value_name = "L", num_args = 0..=1, require_equals = true)]
        oracle: Option<Option<usize>>,
        /// Maximum number of products the oracle may form.
        #[arg(long, default_value_t = DEFAULT_PRODUCT_BUDGET)]
        budget: u128,
    },
    /// Projective orbit of the powers with per-step ranks.
    Powers {
        #[command(flatten)]
        input: Input,
        /// Stop after this many powers (default n^4 + n^2).
        #[arg(long)]
        max_steps: Option<usize>,
        /// Number of powers listed in the rank trace.
        #[arg(long, default_value_t = 10)]
        trace: usize,
        /// Largest size for the enumerated tropical rank.
        #[arg(long, default_value_t = DEFAULT_BRUTE_CAP)]
        brute_max: usize,
    },
}

enum Failure {
    Input(String),
    Precondition(String),
    Internal(String),
}

impl Failure {
    fn from_error(source: &str, err: Error) -> Self {
        match err {
            Error::Parse { .. } => Failure::Input(format!("{source}: {err}")),
            Error::Internal(_) => Failure::Internal(format!("{source}: {err}")),
            _ => Failure::Precondition(format!("{source}: {err}")),
        }
    }
}

fn display_name(path: &PathBuf) -> String {
    if path.as_os_str() == "-" {
        "<stdin>".to_string()
    } else {
        path.display().to_string()
    }
}

fn load(path: &PathBuf) -> Result<TropMatrix, Failure> {
    let name = display_name(path);
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Input(format!("{name}: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{name}: {e}")))?
    };
    parse_matrix(&text).map_err(|e| Failure::from_error(&name, e))
}

fn run(command: Command) -> Result<StructuredReport, Failure> {
    match command {
        Command::Spectral(input) => {
            let a = load(&input.file)?;
            spectral_report(&a)
                .map(StructuredReport::Spectral)
                .map_err(|e| Failure::from_error(&display_name(&input.file), e))
        }
        Command::Ranks { input, brute_max } => {
            let a = load(&input.file)?;
            ranks_report(&a, brute_max)
                .map(StructuredReport::Ranks)
                .map_err(|e| Failure::from_error(&display_name(&input.file), e))
        }
        Command::Urank {
            input,
            oracle,
            max_steps,
        } => {
            let a = load(&input.file)?;
            let steps = oracle.then(|| max_steps.unwrap_or_else(|| default_max_steps(a.rows())));
            urank_report(&a, steps)
                .map(StructuredReport::Urank)
                .map_err(|e| Failure::from_error(&display_name(&input.file), e))
        }
        Command::Semigroup {
            files,
            oracle,
            budget,
        } => {
            let generators = files.iter().map(load).collect::<Result<Vec<_>, _>>()?;
            let n = generators[0].rows();
            let oracle = oracle.map(|len| (len.unwrap_or_else(|| default_oracle_length(n)), budget));
            semigroup_report(generators, oracle)
                .map(StructuredReport::Semigroup)
                .map_err(|e| Failure::from_error("semigroup", e))
        }
        Command::Powers {
            input,
            max_steps,
            trace,
            brute_max,
        } => {
            let a = load(&input.file)?;
            let steps = max_steps.unwrap_or_else(|| default_max_steps(a.rows()));
            powers_report(&a, steps, trace, brute_max)
                .map(StructuredReport::Powers)
                .map_err(|e| Failure::from_error(&display_name(&input.file), e))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            if cli.json {
                match serde_json::to_string_pretty(&report) {
                    Ok(text) => println!("{text}"),
                    Err(e) => {
                        eprintln!("error: cannot serialize report: {e}");
                        return ExitCode::from(1);
                    }
                }
            } else {
                print!("{report}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Precondition(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
