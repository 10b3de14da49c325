use clap::Args;
use clifford3_core::{h0_rank3_semistable_bound, BundleInvariants, Curve, Error, Rank3Query};
use serde::Serialize;

use crate::output::{csv_writer, print_json, CliResult, Format};

/// Sweep of the semistable rank-3 bound over the degrees `d = s1 (mod 3)`.
#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct TableArgs {
    #[arg(long)]
    genus: i64,
    #[arg(long)]
    s1: i64,
    #[arg(long)]
    s2: i64,
    /// Defaults to s1.
    #[arg(long)]
    d_min: Option<i64>,
    /// Defaults to 6g-6-s2.
    #[arg(long)]
    d_max: Option<i64>,
    #[arg(long)]
    hyperelliptic: bool,
}

#[derive(Debug, Serialize)]
struct Row {
    d: i64,
    value: i64,
    case: String,
    exact: bool,
}

fn rows(args: &TableArgs) -> CliResult<Vec<Row>> {
    let curve = Curve::new(args.genus, args.hyperelliptic)?;
    if args.s1 < 0 || args.s2 < 0 {
        return Err(Error::NotSemistable.into());
    }
    if (args.s2 - 2 * args.s1).rem_euclid(3) != 0 {
        return Err(Error::CongruenceViolation { r: 2 }.into());
    }
    let d_min = args.d_min.unwrap_or(args.s1);
    let d_max = args.d_max.unwrap_or(6 * args.genus - 6 - args.s2);
    let first = d_min + (args.s1 - d_min).rem_euclid(3);
    let mut out = Vec::new();
    for d in (first..=d_max).step_by(3) {
        let inv = BundleInvariants::rank3(d, args.s1, args.s2)?;
        let q = Rank3Query::new(curve, inv, None)?.with_hyperelliptic_sharpening(args.hyperelliptic);
        let b = h0_rank3_semistable_bound(&q)?;
        out.push(Row { d, value: b.value, case: b.case.to_string(), exact: b.exact });
    }
    Ok(out)
}

pub fn run(args: &TableArgs, format: Option<Format>) -> CliResult {
    let rows = rows(args)?;
    match format.unwrap_or(Format::Csv) {
        Format::Json => print_json(&rows),
        Format::Csv => {
            let mut w = csv_writer(&["d", "value", "case", "exact"])?;
            for r in &rows {
                w.write_record([r.d.to_string(), r.value.to_string(), r.case.clone(), r.exact.to_string()])?;
            }
            w.flush()?;
            Ok(())
        }
    }
}
