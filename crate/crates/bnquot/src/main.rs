use std::{fs, io::Write, path::PathBuf, process::ExitCode};

use bnquot::{
    render,
    report::{Dimension, Sample, StratumReport, Survey},
    verify, Failure, DEFAULT_MAX_DEGREE,
};
use bnquot_core::{
    lab::sample::{sample, DEFAULT_BOUND},
    ring::PairingSign,
    Scenario,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "bnquot",
    version,
    about = "Brill-Noether classes on Quot schemes of maps to G(2,4)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fundamental class of the stratum with invariants (g, d, s).
    Class {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        degree: i64,
        #[arg(long, allow_negative_numbers = true)]
        segre: i64,
        /// Truncation degree of the cohomology model.
        #[arg(long)]
        truncate: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Genus-0 splitting-type laboratory.
    Lab {
        #[command(subcommand)]
        command: LabCommand,
    },
    /// Run acceptance criteria 1-9 and print the discrepancy ledger.
    Verify {
        #[arg(long, default_value_t = verify::Options::default().seed)]
        seed: u64,
        /// Run only these criteria (repeatable); all of 1-9 by default.
        #[arg(long = "criterion", value_parser = clap::value_parser!(u8).range(1..=9))]
        criteria: Vec<u8>,
        /// Flip the sign of the curve pairing (mutation check; must fail).
        #[arg(long, hide = true)]
        flip_pairing: bool,
    },
}

#[derive(Subcommand)]
enum LabCommand {
    /// Tally splitting types of random degree-d kernels.
    Survey {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Draw one kernel and report its invariants.
    Sample {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Compare the stratum dimension formula with a parameter count.
    Dimension {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        a: u32,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Output {
    fn emit<T: Serialize>(
        &self,
        value: &T,
        text: impl FnOnce(&T) -> String,
    ) -> Result<(), Failure> {
        let body = match self.format {
            Format::Text => text(value),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(value)
                    .map_err(|e| Failure::Invariant(e.to_string()))?;
                s.push('\n');
                s
            }
        };
        match &self.out {
            Some(path) => fs::write(path, body)?,
            None => std::io::stdout().write_all(body.as_bytes())?,
        }
        Ok(())
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Class {
            genus,
            degree,
            segre,
            truncate,
            output,
        } => {
            let sc = Scenario::new(genus, degree, segre, truncate)?;
            let report = StratumReport::build(&sc)?;
            output.emit(&report, render::stratum)
        }
        Command::Lab { command } => lab(command),
        Command::Verify {
            seed,
            criteria,
            flip_pairing,
        } => {
            let opts = verify::Options {
                pairing: if flip_pairing {
                    PairingSign::Negative
                } else {
                    PairingSign::Positive
                },
                seed,
            };
            let outcomes: Vec<verify::Outcome> = if criteria.is_empty() {
                verify::run_all(&opts)
            } else {
                criteria.iter().map(|&id| verify::run(id, &opts)).collect()
            };
            let mut out = String::new();
            for o in &outcomes {
                out.push_str(&o.line());
                out.push('\n');
            }
            out.push_str("\ndiscrepancy ledger (informational)\n");
            for e in verify::ledger()? {
                render::ledger_entry(&mut out, &e);
            }
            let failed: Vec<String> = outcomes
                .iter()
                .filter(|o| !o.passed)
                .map(|o| o.id.to_string())
                .collect();
            std::io::stdout().write_all(out.as_bytes())?;
            if failed.is_empty() {
                Ok(())
            } else {
                Err(Failure::Invariant(format!(
                    "criteria {} failed",
                    failed.join(", ")
                )))
            }
        }
    }
}

fn lab(command: LabCommand) -> Result<(), Failure> {
    match command {
        LabCommand::Survey {
            degree,
            trials,
            seed,
            jobs,
            max_degree,
            output,
        } => {
            if degree > max_degree {
                return Err(Failure::Parameter(format!(
                    "degree {degree} exceeds the survey limit {max_degree} (raise it with --max-degree)"
                )));
            }
            let table = bnquot::survey(degree, trials, seed, jobs)?;
            output.emit(&Survey::new(&table, seed), render::survey)
        }
        LabCommand::Sample {
            degree,
            seed,
            output,
        } => {
            let k = sample(degree, seed, DEFAULT_BOUND)?;
            output.emit(&Sample::new(&k, seed)?, render::sample)
        }
        LabCommand::Dimension { degree, a, output } => {
            output.emit(&Dimension::compute(degree, a)?, render::dimension)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
