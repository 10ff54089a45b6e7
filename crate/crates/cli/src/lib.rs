//! Command-line front end: `compute`, `lorenz` and `simulate`.
//!
//! Exit codes: 0 success, 2 I/O or parse error, 3 dataset validation
//! error, 4 invalid experiment parameters.

pub mod document;
pub mod error;
pub mod input;
pub mod plot;
pub mod simulate;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use skewgini::{
    report, sensitivity_sweep, Dataset, ExperimentConfig, Family, InequalityReport, LorenzCurve,
};

use crate::document::{ReportDocument, NON_CONVEX_WARNING};
pub use crate::error::{CliError, Result};
use crate::input::{Column, InputFormat, InputSpec};
use crate::plot::{Curve, PlotStyle};

#[derive(Debug, Parser)]
#[command(
    name = "skewgini",
    version,
    about = "Gini, tail-weighted Ginis and the skewness-adjusted Gini"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the indices for one column of observations.
    Compute(ComputeArgs),
    /// Plot one or more Lorenz curves.
    Lorenz(LorenzArgs),
    /// Run a seeded Monte-Carlo experiment.
    Simulate(SimulateArgs),
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Input format; inferred from the file extension when omitted.
    #[arg(long, value_enum)]
    pub input_format: Option<InputFormat>,
    /// Column by header name or 1-based index (default: first numeric column).
    #[arg(long)]
    pub column: Option<Column>,
    /// The first row is a header.
    #[arg(long)]
    pub header: bool,
    /// Inputs hold (p, q) Lorenz points in their first two columns.
    #[arg(long)]
    pub from_lorenz: bool,
}

impl InputArgs {
    fn spec(&self, path: &str) -> InputSpec {
        let mut spec = InputSpec::new(path);
        if let Some(f) = self.input_format {
            spec.format = f;
        }
        spec.column = self.column.clone();
        spec.header = self.header;
        spec
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Input file, or `-` for standard input.
    #[arg(long, default_value = "-")]
    pub input: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: ReportFormat,
    #[command(flatten)]
    pub source: InputArgs,
    /// Write here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Leave out tool version, timestamp and input digest.
    #[arg(long)]
    pub no_provenance: bool,
}

#[derive(Debug, Args)]
pub struct LorenzArgs {
    /// Input file; repeat to overlay several curves.
    #[arg(long, required = true)]
    pub input: Vec<String>,
    /// Legend label per input (default: file stem).
    #[arg(long)]
    pub label: Vec<String>,
    #[arg(long, value_enum, default_value = "svg")]
    pub style: PlotStyle,
    #[command(flatten)]
    pub source: InputArgs,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Dist {
    Lognormal,
    Pareto,
    Uniform,
    #[value(name = "symmetric_triangular", alias = "symmetric-triangular")]
    SymmetricTriangular,
    #[value(name = "one_holder", alias = "one-holder")]
    OneHolder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, value_enum)]
    pub dist: Dist,
    /// Observations per replication.
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub reps: usize,
    /// Required; there is no implicit seeding.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Lognormal shape.
    #[arg(long, default_value_t = 1.0)]
    pub sigma: f64,
    /// Pareto tail index (minimum 1).
    #[arg(long, default_value_t = 1.5)]
    pub alpha: f64,
    /// Lower bound for uniform and symmetric_triangular.
    #[arg(long, default_value_t = 0.0)]
    pub low: f64,
    /// Upper bound for uniform and symmetric_triangular.
    #[arg(long, default_value_t = 1.0)]
    pub high: f64,
    #[arg(long, value_enum, default_value = "json")]
    pub format: TableFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

impl SimulateArgs {
    pub fn config(&self) -> Result<ExperimentConfig> {
        let seed = self
            .seed
            .ok_or_else(|| CliError::Experiment("--seed is required".into()))?;
        let family = match self.dist {
            Dist::Lognormal => Family::Lognormal { sigma: self.sigma },
            Dist::Pareto => Family::Pareto { alpha: self.alpha },
            Dist::Uniform => Family::Uniform {
                low: self.low,
                high: self.high,
            },
            Dist::SymmetricTriangular => Family::SymmetricTriangular {
                low: self.low,
                high: self.high,
            },
            Dist::OneHolder => Family::OneHolder,
        };
        Ok(ExperimentConfig::new(family, self.n, self.reps, seed)?)
    }
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Compute(args) => cmd_compute(&args),
        Command::Lorenz(args) => cmd_lorenz(&args),
        Command::Simulate(args) => cmd_simulate(&args),
    }
}

fn emit(output: Option<&PathBuf>, body: &str) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, body).map_err(|e| CliError::io(path, e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::io("<stdout>", e))
        }
    }
}

fn warn_if_non_convex(r: &InequalityReport, name: &str) {
    if !r.convex {
        eprintln!("warning: {name}: {NON_CONVEX_WARNING}");
    }
}

/// Builds the report document for one input.
pub fn compute_document(spec: &InputSpec, from_lorenz: bool) -> Result<(ReportDocument, Vec<u8>)> {
    if from_lorenz {
        let (points, bytes) = input::read_points(spec)?;
        let lc = LorenzCurve::from_points(&points)?;
        let r = skewgini::metrics_from_lorenz(&points)?;
        warn_if_non_convex(&r, &spec.display_name());
        Ok((ReportDocument::from_lorenz(&lc, &r), bytes))
    } else {
        let (values, bytes) = input::read_values(spec)?;
        let d = Dataset::new(values)?;
        Ok((ReportDocument::from_dataset(&d, &report(&d)), bytes))
    }
}

pub fn cmd_compute(args: &ComputeArgs) -> Result<()> {
    let spec = args.source.spec(&args.input);
    let (mut doc, bytes) = compute_document(&spec, args.source.from_lorenz)?;
    if !args.no_provenance {
        doc = doc.with_provenance(&bytes);
    }
    let body = match args.format {
        ReportFormat::Json => doc.to_json(),
        ReportFormat::Csv => doc.to_csv(),
        ReportFormat::Text => doc.to_text(),
    };
    emit(args.output.as_ref(), &body)
}

pub fn cmd_lorenz(args: &LorenzArgs) -> Result<()> {
    let mut curves = Vec::with_capacity(args.input.len());
    for (k, path) in args.input.iter().enumerate() {
        let spec = args.source.spec(path);
        let (doc, _) = compute_document(&spec, args.source.from_lorenz)?;
        let label = args
            .label
            .get(k)
            .cloned()
            .unwrap_or_else(|| spec.display_name());
        curves.push(Curve {
            label,
            points: doc.lorenz.p.into_iter().zip(doc.lorenz.q).collect(),
        });
    }
    emit(args.output.as_ref(), &plot::render(args.style, &curves))
}

pub fn cmd_simulate(args: &SimulateArgs) -> Result<()> {
    let config = args.config()?;
    let table = sensitivity_sweep(&config).map_err(|e| CliError::Experiment(e.to_string()))?;
    let body = match args.format {
        TableFormat::Json => simulate::to_json(&table),
        TableFormat::Csv => simulate::to_csv(&table),
    };
    emit(args.output.as_ref(), &body)
}
