use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod corpus;
mod problem;
mod run;

use problem::{Failure, Problem};
use run::{Check, Command, Outcome};

/// Exact self-linking numbers of braids in open books.
///
/// Exit codes: 0 success, 1 check conclusion fails, 2 bad input,
/// 3 c undetermined, 4 not null-homologous, 5 precondition violated.
#[derive(Parser)]
#[command(name = "obsl", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Self-linking report for a problem file.
    Sl {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        output: Format,
        /// Seifert class as comma-separated coordinates, overriding the file.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        seifert_class: Option<Vec<i64>>,
    },
    /// Run one of the proposition checkers.
    Check {
        which: Check,
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        output: Format,
    },
    /// Replay a directory of problem files against their sidecars.
    Corpus {
        dir: PathBuf,
        #[arg(long)]
        parallel: bool,
        /// Write the current results as the expected sidecars.
        #[arg(long)]
        bless: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn emit(result: Result<Outcome, Failure>, format: Format) -> ExitCode {
    match result {
        Ok(o) => {
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&o.output).expect("reports serialize")
                ),
                Format::Text => print!("{}", run::render_text(&o.output)),
            }
            ExitCode::from(o.exit as u8)
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Cmd::Sl {
            file,
            output,
            seifert_class,
        } => {
            let result = Problem::read(&file).and_then(|p| run::run(&p, Command::Sl, seifert_class.as_deref()));
            emit(result, output)
        }
        Cmd::Check { which, file, output } => {
            let result = Problem::read(&file).and_then(|p| run::run(&p, Command::Check(which), None));
            emit(result, output)
        }
        Cmd::Corpus { dir, parallel, bless } => match corpus::run_corpus(&dir, parallel, bless) {
            Ok(results) => {
                print!("{}", corpus::summary(&results));
                if results.iter().all(|r| r.passed()) {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(e) => {
                eprintln!("error: {}: {e}", dir.display());
                ExitCode::from(problem::EXIT_INPUT as u8)
            }
        },
    }
}
