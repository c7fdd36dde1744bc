use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sixfold::{
    build_count_report, build_terms_report, paper_check_exit_code, render_bench, render_count,
    render_paper_check, render_terms, render_verify, run_bench, run_paper_check, run_verify,
    verify_exit_code, Format, EXIT_USAGE,
};
use sixfold_core::{ResidueSide, DEFAULT_SIEVE_CAP};

/// Largest m with 6m+1 inside the native word.
const MAX_M: u64 = (u64::MAX - 1) / 6;

#[derive(Parser)]
#[command(
    name = "sixfold",
    version,
    about = "Exact prime counting in the 6k±1 residue classes, with a sieve oracle referee"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Plus,
    Minus,
}

impl From<SideArg> for ResidueSide {
    fn from(s: SideArg) -> ResidueSide {
        match s {
            SideArg::Plus => ResidueSide::PlusOne,
            SideArg::Minus => ResidueSide::MinusOne,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Composite and prime counts for both progressions up to 6m±1
    Count {
        #[arg(value_parser = clap::value_parser!(u64).range(1..=MAX_M))]
        m: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The sieve-term table for one side: divisors, classes, counts
    Terms {
        #[arg(value_parser = clap::value_parser!(u64).range(1..=MAX_M))]
        m: u64,
        #[arg(long, value_enum)]
        side: SideArg,
        /// Only show levels up to this q
        #[arg(long)]
        max_q: Option<u32>,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare engine and oracle for every m up to m_max
    Verify {
        #[arg(value_parser = clap::value_parser!(u64).range(1..=MAX_M))]
        m_max: u64,
        /// Stop at the first mismatch
        #[arg(long)]
        fail_fast: bool,
        /// Memory cap for the oracle sieve (table limit)
        #[arg(long, default_value_t = DEFAULT_SIEVE_CAP)]
        oracle_cap: u64,
    },
    /// Assert the printed worked examples and list the documented errata
    PaperCheck,
    /// Time the engine against the oracle at one m
    Bench {
        #[arg(value_parser = clap::value_parser!(u64).range(1..=MAX_M))]
        m: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        repetitions: u64,
        /// Memory cap for the oracle sieve (table limit)
        #[arg(long, default_value_t = DEFAULT_SIEVE_CAP)]
        oracle_cap: u64,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn usage_error(err: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Count { m, format, out } => {
            let report = match build_count_report(m) {
                Ok(r) => r,
                Err(e) => return usage_error(e),
            };
            let text = render_count(&report, format.into());
            match emit(&text, out.as_ref()) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => usage_error(e),
            }
        }
        Command::Terms {
            m,
            side,
            max_q,
            format,
            out,
        } => {
            let report = match build_terms_report(m, side.into(), max_q) {
                Ok(r) => r,
                Err(e) => return usage_error(e),
            };
            let text = render_terms(&report, format.into());
            match emit(&text, out.as_ref()) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => usage_error(e),
            }
        }
        Command::Verify {
            m_max,
            fail_fast,
            oracle_cap,
        } => {
            let outcome = match run_verify(m_max, fail_fast, oracle_cap) {
                Ok(o) => o,
                Err(e) => return usage_error(e),
            };
            print!("{}", render_verify(&outcome));
            ExitCode::from(verify_exit_code(&outcome))
        }
        Command::PaperCheck => {
            let report = match run_paper_check() {
                Ok(r) => r,
                Err(e) => return usage_error(e),
            };
            print!("{}", render_paper_check(&report));
            ExitCode::from(paper_check_exit_code(&report))
        }
        Command::Bench {
            m,
            repetitions,
            oracle_cap,
        } => {
            let report = match run_bench(m, repetitions, oracle_cap) {
                Ok(r) => r,
                Err(e) => return usage_error(e),
            };
            print!("{}", render_bench(&report));
            ExitCode::SUCCESS
        }
    }
}
