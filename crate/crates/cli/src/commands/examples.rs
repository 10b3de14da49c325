use clap::{Args, ValueEnum};
use clifford3_core::{
    family_a, family_b, family_c, suite, unstable_sharpness, Curve, ExampleReport, Variant,
};

use crate::output::{csv_writer, print_json, CliError, CliResult, Format};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    A,
    B,
    C,
    Unstable,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    E1,
    E2,
}

/// Sharp example families and their bounds.
#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct ExamplesArgs {
    #[arg(long, required_unless_present = "suite", conflicts_with = "suite")]
    family: Option<FamilyArg>,
    #[arg(long, required_unless_present = "suite")]
    genus: Option<i64>,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    k: Option<i64>,
    #[arg(long)]
    m: Option<i64>,
    #[arg(long)]
    variant: Option<VariantArg>,
    #[arg(long)]
    dl: Option<i64>,
    #[arg(long)]
    df: Option<i64>,
    #[arg(long)]
    s1f: Option<i64>,
    /// Every valid member up to --max-genus, as a sharpness table.
    #[arg(long, requires = "max_genus")]
    suite: bool,
    #[arg(long)]
    max_genus: Option<i64>,
}

fn need(value: Option<i64>, flag: &str) -> CliResult<i64> {
    value.ok_or_else(|| CliError::usage("MissingArgument", format!("{flag} is required for this family")))
}

fn single(args: &ExamplesArgs, family: FamilyArg, g: i64) -> CliResult<ExampleReport> {
    Ok(match family {
        FamilyArg::A => family_a(g, args.n.unwrap_or(0), need(args.k, "--k")?)?,
        FamilyArg::B => family_b(g, need(args.m, "--m")?)?,
        FamilyArg::C => {
            let variant = match args.variant {
                Some(VariantArg::E1) => Variant::E1,
                Some(VariantArg::E2) => Variant::E2,
                None => return Err(CliError::usage("MissingArgument", "--variant is required for family c")),
            };
            family_c(variant, g, need(args.k, "--k")?)?
        }
        FamilyArg::Unstable => {
            let curve = Curve::hyperelliptic(g)?;
            unstable_sharpness(
                &curve,
                need(args.dl, "--dl")?,
                need(args.df, "--df")?,
                need(args.s1f, "--s1f")?,
            )?
        }
    })
}

const HEADER: [&str; 10] =
    ["family", "genus", "params", "degree", "s1", "s2", "exact_h0", "bound", "case", "sharp"];

fn write_table(reports: &[ExampleReport]) -> CliResult {
    let mut w = csv_writer(&HEADER)?;
    for r in reports {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        w.write_record([
            r.family.label().to_string(),
            r.genus.to_string(),
            params.join(";"),
            r.invariants.degree().to_string(),
            r.invariants.s_r(1).to_string(),
            r.invariants.s_r(2).to_string(),
            r.exact_h0.to_string(),
            r.bound.value.to_string(),
            r.bound.case.to_string(),
            r.sharp.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn run(args: &ExamplesArgs, format: Option<Format>) -> CliResult {
    match (args.family, args.genus) {
        (Some(family), Some(g)) if !args.suite => {
            let report = single(args, family, g)?;
            match format.unwrap_or(Format::Json) {
                Format::Json => print_json(&report),
                Format::Csv => write_table(std::slice::from_ref(&report)),
            }
        }
        _ => {
            let max_genus = args.max_genus.expect("clap enforces --max-genus with --suite");
            let reports = suite(max_genus);
            match format.unwrap_or(Format::Csv) {
                Format::Json => print_json(&reports),
                Format::Csv => write_table(&reports),
            }
        }
    }
}
