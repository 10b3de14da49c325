use clap::Args;
use clifford3_core::{
    h0_line_bound, h0_quotient_bound, h0_rank2_bound, h0_rank3_semistable_bound, h0_rank3_unstable_bound,
    slope_bound, BoundResult, BundleInvariants, Curve, Rank3Query,
};

use crate::output::{csv_writer, print_json, CliError, CliResult, Format};

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct BoundArgs {
    #[arg(long)]
    genus: i64,
    #[arg(long)]
    rank: u8,
    #[arg(long)]
    degree: i64,
    #[arg(long)]
    s1: Option<i64>,
    #[arg(long)]
    s2: Option<i64>,
    /// s1 of a minimal-degree rank-2 quotient.
    #[arg(long)]
    s1f: Option<i64>,
    /// Hyperelliptic curve; turns on the hyperelliptic sharpenings.
    #[arg(long)]
    hyperelliptic: bool,
    /// Krawtchouk refinement.
    #[arg(long)]
    delta: bool,
    /// Force the unstable bound (picked automatically when some s_r < 0).
    #[arg(long)]
    unstable: bool,
    /// Stability of the quotient for the unstable bound; defaults to s1f >= 0.
    #[arg(long, value_name = "BOOL")]
    f_semistable: Option<bool>,
    /// Bound through the minimal-degree quotient instead of the stability degrees.
    #[arg(long, conflicts_with = "slope")]
    quotient_bound: bool,
    /// Slope bound for stable bundles of degree below 6.
    #[arg(long)]
    slope: bool,
}

impl BoundArgs {
    fn stability_degrees(&self) -> CliResult<Vec<i64>> {
        match (self.s1, self.s2) {
            (None, Some(_)) => Err(CliError::usage("MissingArgument", "--s2 needs --s1")),
            (s1, s2) => Ok(s1.into_iter().chain(s2).collect()),
        }
    }

    fn compute(&self) -> CliResult<BoundResult> {
        let curve = Curve::new(self.genus, self.hyperelliptic)?;
        let inv = BundleInvariants::new(self.rank, self.degree, &self.stability_degrees()?)?;
        if self.slope {
            if self.rank != 3 || !inv.is_stable() {
                return Err(CliError::usage("NotStable", "the slope bound needs a stable rank-3 bundle"));
            }
            return Ok(slope_bound(self.genus, self.degree)?);
        }
        match self.rank {
            1 => Ok(h0_line_bound(&curve, self.degree)),
            2 => Ok(h0_rank2_bound(&curve, self.degree, inv.s_r(1), self.delta)?),
            _ => {
                let q = Rank3Query::new(curve, inv, self.s1f)?
                    .with_delta(self.delta)
                    .with_hyperelliptic_sharpening(self.hyperelliptic);
                if self.quotient_bound {
                    Ok(h0_quotient_bound(&q)?)
                } else if self.unstable || !inv.is_semistable() {
                    let quotient_semistable = self.f_semistable.unwrap_or(self.s1f.unwrap_or(0) >= 0);
                    Ok(h0_rank3_unstable_bound(&q, quotient_semistable)?)
                } else {
                    Ok(h0_rank3_semistable_bound(&q)?)
                }
            }
        }
    }
}

pub fn run(args: &BoundArgs, format: Option<Format>) -> CliResult {
    let result = args.compute()?;
    match format.unwrap_or(Format::Json) {
        Format::Json => print_json(&result),
        Format::Csv => {
            let mut w = csv_writer(&["value", "case", "exact", "assumptions"])?;
            w.write_record([
                result.value.to_string(),
                result.case.to_string(),
                result.exact.to_string(),
                result.assumption_labels().join(";"),
            ])?;
            w.flush()?;
            Ok(())
        }
    }
}
