use clap::Args;
use clifford3_core::{seed_split_state, split_rank3_seed, Curve, ElmState, StepChoice};
use serde::Serialize;

use crate::output::{csv_writer, print_json, CliError, CliResult, Format};

/// Trajectory of elementary transformations from O(p_1) + ... + O(p_n).
#[derive(Debug, Args)]
pub struct ElmtransArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
    rank: u8,
    #[arg(long)]
    genus: i64,
    #[arg(long)]
    steps: u32,
    /// n-1 bits per step, step-major; 1 means the line meets a maximal
    /// rank-r subbundle. Characters other than 0 and 1 must be separators
    /// (space, comma, underscore, slash). Defaults to all zeros.
    #[arg(long)]
    choices: Option<String>,
    #[arg(long)]
    hyperelliptic: bool,
}

#[derive(Debug, Serialize)]
struct DimEntry {
    r: usize,
    i: i64,
    upper: i64,
}

#[derive(Debug, Serialize)]
struct Line {
    step: u32,
    degree: i64,
    s: Vec<i64>,
    certified: Vec<bool>,
    sb_dim_upper: Vec<DimEntry>,
}

impl Line {
    fn of(st: &ElmState) -> Self {
        let ranks = usize::from(st.inv().rank()) - 1;
        Line {
            step: st.step_count(),
            degree: st.inv().degree(),
            s: st.inv().s().to_vec(),
            certified: (1..=ranks).map(|r| st.is_certified(r)).collect(),
            sb_dim_upper: st.dim_bounds().into_iter().map(|(r, i, upper)| DimEntry { r, i, upper }).collect(),
        }
    }
}

fn parse_choices(bits: &str, rank: u8, steps: u32) -> CliResult<Vec<StepChoice>> {
    let per_step = usize::from(rank) - 1;
    let mut flags = Vec::new();
    for c in bits.chars() {
        match c {
            '0' => flags.push(false),
            '1' => flags.push(true),
            ' ' | ',' | '_' | '/' => {}
            other => {
                return Err(CliError::usage(
                    "InvalidChoices",
                    format!("unexpected character {other:?} in --choices"),
                ))
            }
        }
    }
    if flags.len() != per_step * steps as usize {
        return Err(CliError::usage(
            "InvalidChoices",
            format!(
                "--choices has {} bits, expected {} for {steps} steps",
                flags.len(),
                per_step * steps as usize
            ),
        ));
    }
    Ok(flags
        .chunks(per_step)
        .map(|chunk| StepChoice::new(chunk[0], chunk.get(1).copied().unwrap_or(false)))
        .collect())
}

pub fn run(args: &ElmtransArgs, format: Option<Format>) -> CliResult {
    let curve = Curve::new(args.genus, args.hyperelliptic)?;
    let seed = if args.rank == 3 { split_rank3_seed(&curve)? } else { seed_split_state(&curve, 2)? };
    let choices = match &args.choices {
        Some(bits) => parse_choices(bits, args.rank, args.steps)?,
        None => vec![StepChoice::general(); args.steps as usize],
    };
    let mut trajectory = vec![seed.clone()];
    trajectory.extend(seed.run(choices));

    match format.unwrap_or(Format::Json) {
        Format::Json => trajectory.iter().try_for_each(|st| print_json(&Line::of(st))),
        Format::Csv => {
            let mut w = csv_writer(&["step", "degree", "s", "certified"])?;
            for st in &trajectory {
                let line = Line::of(st);
                let join = |v: Vec<String>| v.join(";");
                w.write_record([
                    line.step.to_string(),
                    line.degree.to_string(),
                    join(line.s.iter().map(i64::to_string).collect()),
                    join(line.certified.iter().map(bool::to_string).collect()),
                ])?;
            }
            w.flush()?;
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn choices_are_step_major() {
        let c = parse_choices("01_10", 3, 2).unwrap();
        assert_eq!(c, [StepChoice::new(false, true), StepChoice::new(true, false)]);
        assert_eq!(parse_choices("1 0 1", 2, 3).unwrap().len(), 3);
        assert!(parse_choices("012", 3, 1).is_err());
        assert!(parse_choices("0", 3, 1).is_err());
    }
}
