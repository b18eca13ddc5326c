use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cartan_toric::fan::{fan_json, fan_svg, FanSigma};
use cartan_toric::report::{self, coh_text, fan_text, peterson_text};
use cartan_toric::{CartanMatrix, Error};

#[derive(Parser)]
#[command(name = "cartan-toric", version, about = "Exact checks on the toric orbifold of a Cartan matrix")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Svg,
}

#[derive(clap::Args)]
struct Output {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Cones, oracle, completeness, wall relations, ampleness, Cox sequence
    Fan {
        #[arg(long = "type")]
        type_name: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// random points for the covering check
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Presentations, graded dimensions, localization constants, dictionary
    Coh {
        #[arg(long = "type")]
        type_name: String,
        #[command(flatten)]
        output: Output,
    },
    /// Type-A Peterson checks on SL(rank + 1)
    Peterson {
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// floating-point sampler for rank 3
        #[arg(long)]
        numeric: bool,
        #[command(flatten)]
        output: Output,
    },
    /// SVG picture of a rank-2 fan
    Plot {
        #[arg(long = "type")]
        type_name: String,
        #[arg(long, value_enum, default_value = "svg")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::InvalidComponent { .. }
            | Error::Guard { .. }
            | Error::UnsupportedRank(_) => Failure::Usage(e.to_string()),
            other => Failure::Verification(other.to_string()),
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render<T: Serialize>(r: &T, text: impl Fn(&T) -> String, o: &Output) -> Result<(), Failure> {
    let body = match o.format {
        Format::Json => serde_json::to_string_pretty(r).expect("reports serialize") + "\n",
        Format::Text => text(r),
        Format::Svg => return Err(Failure::Usage("svg output is only available for `plot`".into())),
    };
    emit(&body, o.out.as_ref())
}

fn verdict(pass: bool) -> Result<bool, Failure> {
    Ok(pass)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Fan {
            type_name,
            seed,
            samples,
            output,
        } => {
            let c = CartanMatrix::parse(&type_name)?;
            let r = report::fan_run(&c, seed, samples)?;
            render(&r, fan_text, &output)?;
            verdict(r.pass)
        }
        Command::Coh { type_name, output } => {
            let c = CartanMatrix::parse(&type_name)?;
            let r = report::coh_run(&c)?;
            render(&r, coh_text, &output)?;
            verdict(r.pass)
        }
        Command::Peterson {
            rank,
            samples,
            seed,
            numeric,
            output,
        } => {
            if rank == 3 && numeric {
                return numeric_run(samples, seed, &output);
            }
            if rank == 3 {
                return Err(Failure::Usage("rank 3 needs --numeric".into()));
            }
            let r = report::peterson_run(rank, samples, seed)?;
            render(&r, peterson_text, &output)?;
            verdict(r.pass)
        }
        Command::Plot {
            type_name,
            format,
            out,
        } => {
            let c = CartanMatrix::parse(&type_name)?;
            let f = FanSigma::new(&c);
            let body = match format {
                Format::Svg => fan_svg(&f)?,
                Format::Json => serde_json::to_string_pretty(&fan_json(&f)).expect("serializes") + "\n",
                Format::Text => return Err(Failure::Usage("plot writes svg or json".into())),
            };
            emit(&body, out.as_ref())?;
            Ok(true)
        }
    }
}

#[cfg(feature = "numeric")]
fn numeric_run(samples: usize, seed: u64, output: &Output) -> Result<bool, Failure> {
    let r = report::peterson_numeric_run(samples, seed)?;
    render(
        &r,
        |r| format!("peterson SL4 numeric: {}\n", if r.pass { "PASS" } else { "FAIL" }),
        output,
    )?;
    verdict(r.pass)
}

#[cfg(not(feature = "numeric"))]
fn numeric_run(_: usize, _: u64, _: &Output) -> Result<bool, Failure> {
    Err(Failure::Usage("built without the `numeric` feature".into()))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Verification(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
