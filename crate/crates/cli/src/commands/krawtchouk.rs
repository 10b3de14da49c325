use clap::Args;
use clifford3_core::{krawtchouk, krawtchouk_oracle, KrawtchoukQuery};

use crate::output::{csv_writer, CliResult, Format};

/// Coefficient of z^r in (1-z)^n (1+z)^(N-n).
#[derive(Debug, Args)]
pub struct KrawtchoukArgs {
    r: i64,
    n: i64,
    #[arg(value_name = "N")]
    big_n: i64,
    /// Expand the polynomial instead of summing binomials (N <= 64).
    #[arg(long)]
    oracle: bool,
}

pub fn run(args: &KrawtchoukArgs, format: Option<Format>) -> CliResult {
    let q = KrawtchoukQuery::new(args.r, args.n, args.big_n)?;
    let value = if args.oracle { krawtchouk_oracle(&q)? } else { krawtchouk(&q) };
    match format.unwrap_or(Format::Json) {
        Format::Json => println!("{value}"),
        Format::Csv => {
            let mut w = csv_writer(&["r", "n", "N", "value"])?;
            w.write_record([
                args.r.to_string(),
                args.n.to_string(),
                args.big_n.to_string(),
                value.to_string(),
            ])?;
            w.flush()?;
        }
    }
    Ok(())
}
