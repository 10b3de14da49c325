//! `clifford3`: upper bounds on h0 of rank 1, 2 and 3 bundles on curves.
//!
//! Results go to stdout as JSON or CSV. Validation errors exit with status 2
//! and print `{"code": ..., "message": ...}` on stderr.

mod commands;
mod output;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use commands::{bound, elmtrans, examples, krawtchouk, table};
use output::{error_json, Format};

#[derive(Debug, Parser)]
#[command(name = "clifford3", version, about = "Clifford-type bounds on h0 for bundles of rank at most 3")]
struct Cli {
    /// Output format; defaults depend on the command.
    #[arg(long, global = true, env = "CLIFFORD3_OUTPUT", value_enum)]
    output: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Upper bound on h0 for one bundle.
    Bound(bound::BoundArgs),
    /// Krawtchouk value K_r(n, N).
    Krawtchouk(krawtchouk::KrawtchoukArgs),
    /// Elementary transformation trajectory, one JSON object per step.
    Elmtrans(elmtrans::ElmtransArgs),
    /// Semistable rank-3 bound over a range of degrees.
    Table(table::TableArgs),
    /// Example families attaining the bounds.
    Examples(examples::ExamplesArgs),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("{}", error_json("InvalidArguments", e.render().to_string().trim().to_string()));
            return ExitCode::from(2);
        }
    };
    let result = match &cli.command {
        Command::Bound(args) => bound::run(args, cli.output),
        Command::Krawtchouk(args) => krawtchouk::run(args, cli.output),
        Command::Elmtrans(args) => elmtrans::run(args, cli.output),
        Command::Table(args) => table::run(args, cli.output),
        Command::Examples(args) => examples::run(args, cli.output),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", error_json(e.code(), e.to_string()));
            ExitCode::from(e.exit_code())
        }
    }
}
