use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use discrete_teissier::{KsConvention, Model};

mod commands;
mod error;
mod ingest;
mod table;

use commands::{MethodChoice, PointFn};
use error::{CliError, CliResult};
use table::Format;

/// Discrete Teissier distribution: fitting, model comparison and tables.
#[derive(Debug, Parser)]
#[command(name = "dteissier", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Ks {
    /// Continuous-sample formula on the sorted, tied observations.
    Continuous,
    /// Exact supremum over the integers.
    Discrete,
}

impl From<Ks> for KsConvention {
    fn from(k: Ks) -> Self {
        match k {
            Ks::Continuous => KsConvention::Continuous,
            Ks::Discrete => KsConvention::Discrete,
        }
    }
}

#[derive(Debug, Args)]
struct DataArgs {
    /// Bundled data set (set-I, set-I-alt, set-II) or path to a text file.
    #[arg(long)]
    data: String,
    /// Store floor(value / d) instead of the raw values.
    #[arg(long, value_name = "D")]
    scale_floor: Option<f64>,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "md")]
    format: Format,
    /// Decimal places in printed numbers.
    #[arg(long)]
    precision: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Estimate theta by maximum likelihood and/or the method of moments.
    Fit {
        #[command(flatten)]
        data: DataArgs,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodChoice,
        #[arg(long, value_enum, default_value = "continuous")]
        ks_convention: Ks,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Fit competing discrete models and rank them by AIC.
    Compare {
        #[command(flatten)]
        data: DataArgs,
        /// Comma-separated models (dt, geo, dr, dw, dpa, dbr, dsli, dpl).
        #[arg(long, value_delimiter = ',', value_parser = parse_model)]
        models: Vec<Model>,
        #[arg(long, value_enum, default_value = "continuous")]
        ks_convention: Ks,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Mean, variance, skewness, excess kurtosis, IOD and CV per theta.
    Describe {
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        theta_grid: Vec<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Stress-strength reliability P(X < Y) over a grid of parameters.
    Ss {
        /// Stress parameters (rows).
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        theta1_grid: Vec<f64>,
        /// Strength parameters (columns).
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        theta2_grid: Vec<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Draw a random sample, one value per line.
    Sample {
        #[arg(long)]
        theta: f64,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write (x, f(x)) points as CSV for external plotting.
    EmitPoints {
        #[arg(long = "fn", value_enum)]
        function: PointFn,
        #[arg(long, required_unless_present = "data")]
        theta: Option<f64>,
        #[arg(long, default_value_t = 20)]
        max_y: u64,
        /// Data for the log-likelihood profile.
        #[arg(long)]
        data: Option<String>,
        #[arg(long, value_name = "D")]
        scale_floor: Option<f64>,
        /// Grid size of the log-likelihood profile.
        #[arg(long, default_value_t = 101)]
        points: usize,
        #[arg(long, default_value_t = 4)]
        precision: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_model(s: &str) -> Result<Model, String> {
    s.parse().map_err(|e: discrete_teissier::Error| e.to_string())
}

/// What a subcommand produced; `failure` is reported after the output.
struct Outcome {
    text: String,
    out: Option<PathBuf>,
    failure: Option<CliError>,
}

impl Outcome {
    fn stdout(text: String) -> Self {
        Outcome { text, out: None, failure: None }
    }
}

fn run(command: Command) -> CliResult<Outcome> {
    match command {
        Command::Fit { data, method, ks_convention, output } => {
            let dataset = ingest::load(&data.data, data.scale_floor)?;
            let (table, unconverged) = commands::fit(&dataset, method, ks_convention.into())?;
            let mut outcome = Outcome::stdout(table.render(output.format, output.precision.unwrap_or(4)));
            if !unconverged.is_empty() {
                outcome.failure = Some(CliError::NotConverged(unconverged.join(" and ")));
            }
            Ok(outcome)
        }
        Command::Compare { data, models, ks_convention, output } => {
            let dataset = ingest::load(&data.data, data.scale_floor)?;
            let models = if models.is_empty() { Model::ALL.to_vec() } else { models };
            let precision = output.precision.unwrap_or(4);
            let table = commands::compare(&dataset, &models, ks_convention.into(), precision)?;
            Ok(Outcome::stdout(table.render(output.format, precision)))
        }
        Command::Describe { theta_grid, output } => {
            let table = commands::describe(&theta_grid)?;
            Ok(Outcome::stdout(table.render(output.format, output.precision.unwrap_or(4))))
        }
        Command::Ss { theta1_grid, theta2_grid, output } => {
            let precision = output.precision.unwrap_or(5);
            let table = commands::stress_strength(&theta1_grid, &theta2_grid, precision)?;
            Ok(Outcome::stdout(table.render(output.format, precision)))
        }
        Command::Sample { theta, n, seed, out } => {
            let values = commands::sample(theta, n, seed)?;
            Ok(Outcome { text: ingest::render(&values), out, failure: None })
        }
        Command::EmitPoints { function, theta, max_y, data, scale_floor, points, precision, out } => {
            let table = match (function, data, theta) {
                (PointFn::LlProfile, Some(spec), _) => {
                    commands::ll_profile(&ingest::load(&spec, scale_floor)?, points)?
                }
                (PointFn::LlProfile, None, _) => {
                    return Err(CliError::Usage("--fn ll-profile needs --data".into()));
                }
                (f, _, Some(theta)) => commands::points_fn(f, theta, max_y)?,
                (_, _, None) => return Err(CliError::Usage("--theta is required".into())),
            };
            Ok(Outcome { text: table.render(Format::Csv, precision), out, failure: None })
        }
    }
}

fn write_out(text: &str, out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command).and_then(|outcome| {
        write_out(&outcome.text, outcome.out.as_deref())?;
        outcome.failure.map_or(Ok(()), Err)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
