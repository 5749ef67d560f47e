mod commands;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{CoeffArgs, EnumerateArgs, KlpolyArgs, TableArgs, VerifyArgs};

/// Exact Kazhdan-Lusztig coefficients of uniform matroids with disjoint bases removed.
#[derive(Debug, Parser)]
#[command(name = "klm", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// One coefficient c^i_{m,d}(rho).
    Coeff(CoeffArgs),
    /// The whole polynomial, lowest degree first.
    Klpoly(KlpolyArgs),
    /// List the legal fillings of a skew shape.
    Enumerate(EnumerateArgs),
    /// Run verification sweeps.
    Verify(VerifyArgs),
    /// Coefficient table over a parameter range.
    Table(TableArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Coeff(a) => commands::coeff(a),
        Command::Klpoly(a) => commands::klpoly(a),
        Command::Enumerate(a) => commands::enumerate(a),
        Command::Verify(a) => commands::verify(a),
        Command::Table(a) => commands::table(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
