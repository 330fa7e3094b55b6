use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nasusy_core::octonion::{evaluate, octonion_to_expr, render_table};
use nasusy_core::report::{render_json, render_text};
use nasusy_core::{parse_with, pretty_print, run_suites, susy, Algebra, ParseMode, ParseOptions, Suite};

#[derive(Parser)]
#[command(name = "nasusy", version, about = "Exact checks for a nonassociative supersymmetry algebra and split-octonions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites (all of them by default).
    Verify {
        #[arg(long = "suite", value_name = "NAME")]
        suites: Vec<Suite>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Parse an expression and print its canonical form.
    Normalize {
        expr: String,
        #[arg(long, value_enum)]
        algebra: AlgebraArg,
        /// Nest unparenthesized product chains to the left instead of rejecting them.
        #[arg(long)]
        permissive: bool,
    },
    /// Print the split-octonion multiplication table.
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraArg {
    Susy,
    Octonion,
}

fn verify(suites: Vec<Suite>, format: Format) -> ExitCode {
    let selected = if suites.is_empty() { Suite::ALL.to_vec() } else { suites };
    let reports = run_suites(&selected);
    match format {
        Format::Text => print!("{}", render_text(&reports)),
        Format::Json => println!("{}", render_json(&reports)),
    }
    if reports.iter().all(|r| r.ok()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn normalize(text: &str, algebra: AlgebraArg, permissive: bool) -> ExitCode {
    let options = ParseOptions {
        mode: if permissive { ParseMode::Permissive } else { ParseMode::Strict },
        algebra: match algebra {
            AlgebraArg::Susy => Algebra::Susy,
            AlgebraArg::Octonion => Algebra::Octonion,
        },
    };
    let parsed = match parse_with(text, options) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    for w in &parsed.warnings {
        eprintln!("warning: {w}");
    }
    let result = match algebra {
        AlgebraArg::Susy => susy::normalize(&parsed.expr),
        AlgebraArg::Octonion => match evaluate(&parsed.expr) {
            Ok(o) => octonion_to_expr(&o),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
    };
    println!("{}", pretty_print(&result));
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { suites, format } => verify(suites, format),
        Command::Normalize { expr, algebra, permissive } => normalize(&expr, algebra, permissive),
        Command::Table => {
            print!("{}", render_table());
            ExitCode::SUCCESS
        }
    }
}
