//! Command-line front end: problem selection, JSON configs, CSV output.
//!
//! Concentrations are relative (`c0 = 1` in every catalogued case), so the
//! values written are `c / c0`.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::warn;
use serde::Deserialize;

use crate::error::Error;
use crate::fvm::{fvm_solve_at, DEFAULT_NODES};
use crate::inversion::{cf_quadrature, solve_grid, DEFAULT_ORDER};
use crate::model::{
    case_library, validate, Layer, Problem, RobinBoundary, Severity, SolutionGrid, TransientSignal,
};
use crate::steady::solve_steady;

pub const EXIT_SOLVER: i32 = 2;
pub const EXIT_CONFIG: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "layered-transport",
    version,
    about = "Solute transport through layered porous media",
    long_about = "Solves the advection-dispersion-reaction equation on a stack of layers.\n\
                  All catalogued cases use c0 = 1, so the CSV values are relative concentrations c/c0."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a catalogued case or a JSON-configured problem and write CSV files.
    Run(RunArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolverKind {
    Salt,
    Fvm,
    Steady,
}

impl SolverKind {
    pub fn label(self) -> &'static str {
        match self {
            SolverKind::Salt => "salt",
            SolverKind::Fvm => "fvm",
            SolverKind::Steady => "steady",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportMode {
    /// One CSV of profiles per solver.
    Profiles,
    /// Profiles plus `table5.csv` with every solver rounded to three decimals.
    Table5,
    /// Profiles plus `compare.csv` with the max abs difference per time for each solver pair.
    TableCompare,
}

#[derive(Debug, Clone, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["case", "config"])))]
pub struct RunArgs {
    /// Catalogued case id.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=13))]
    pub case: Option<u32>,
    /// JSON problem description.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Comma-separated solver list.
    #[arg(long, value_delimiter = ',')]
    pub solvers: Option<Vec<SolverKind>>,
    /// Positions as `start:step:stop`.
    #[arg(long)]
    pub x: Option<String>,
    /// Comma-separated output times.
    #[arg(long, value_delimiter = ',')]
    pub t: Option<Vec<f64>>,
    /// Inversion order (even, 2..=32).
    #[arg(long = "N")]
    pub order: Option<usize>,
    /// Finite-volume node count.
    #[arg(long = "n")]
    pub nodes: Option<usize>,
    /// Output directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReportMode::Profiles)]
    pub report: ReportMode,
    /// Also write a gnuplot script plotting every CSV.
    #[arg(long)]
    pub gnuplot: bool,
}

/// Fully resolved run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub problem: Problem,
    pub solvers: Vec<SolverKind>,
    pub x_values: Vec<f64>,
    pub t_values: Vec<f64>,
    pub order: usize,
    pub nodes: usize,
    pub output: PathBuf,
    pub report: ReportMode,
    pub gnuplot: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Solver(#[from] Error),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Solver(_) | CliError::Io { .. } => EXIT_SOLVER,
        }
    }
}

fn config_err(e: impl std::fmt::Display) -> CliError {
    CliError::Config(e.to_string())
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    layers: Vec<LayerSpec>,
    inlet: BoundarySpec,
    #[serde(default)]
    outlet: Option<BoundarySpec>,
    #[serde(default)]
    run: RunSection,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct LayerSpec {
    x_right: f64,
    #[serde(rename = "R")]
    r: f64,
    #[serde(rename = "D")]
    d: f64,
    v: f64,
    #[serde(default)]
    mu: f64,
    #[serde(default)]
    gamma: f64,
    theta: f64,
    #[serde(default)]
    f: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct BoundarySpec {
    a: f64,
    b: f64,
    #[serde(default)]
    signal: SignalSpec,
}

#[derive(Debug, Clone, Copy, Default, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum SignalSpec {
    #[default]
    Zero,
    Constant {
        c0: f64,
    },
    Step {
        c0: f64,
        t0: f64,
    },
    RampExp {
        c0: f64,
        alpha: f64,
        beta: f64,
    },
}

impl From<SignalSpec> for TransientSignal {
    fn from(s: SignalSpec) -> Self {
        match s {
            SignalSpec::Zero => TransientSignal::Zero,
            SignalSpec::Constant { c0 } => TransientSignal::Constant { c0 },
            SignalSpec::Step { c0, t0 } => TransientSignal::HeavisideStep { c0, t0 },
            SignalSpec::RampExp { c0, alpha, beta } => TransientSignal::RampExp { c0, alpha, beta },
        }
    }
}

impl From<BoundarySpec> for RobinBoundary {
    fn from(b: BoundarySpec) -> Self {
        RobinBoundary::new(b.a, b.b, b.signal.into())
    }
}

/// The optional `run` section of a config file.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunSection {
    pub x: Option<String>,
    pub t: Option<Vec<f64>>,
    #[serde(rename = "N")]
    pub order: Option<usize>,
    pub n: Option<usize>,
    pub solvers: Option<Vec<SolverKind>>,
    pub output: Option<PathBuf>,
}

impl<'de> Deserialize<'de> for SolverKind {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        SolverKind::from_str(&s, false).map_err(serde::de::Error::custom)
    }
}

/// Parses a JSON problem description. `x_left` of each layer is the
/// previous layer's `x_right`; a missing outlet is a zero gradient.
pub fn parse_config_str(text: &str) -> Result<(Problem, RunSection), CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let file: ConfigFile = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        CliError::Config(format!("{path}: {inner}"))
    })?;
    let mut x_left = 0.0;
    let layers = file
        .layers
        .iter()
        .map(|l| {
            let layer = Layer {
                x_left,
                x_right: l.x_right,
                retardation: l.r,
                dispersion: l.d,
                velocity: l.v,
                decay: l.mu,
                production: l.gamma,
                water_content: l.theta,
                initial: l.f,
            };
            x_left = l.x_right;
            layer
        })
        .collect();
    let outlet = file
        .outlet
        .map_or_else(RobinBoundary::zero_gradient, Into::into);
    let problem = Problem {
        layers,
        inlet: file.inlet.into(),
        outlet,
    };
    let violations = validate(&problem);
    for v in violations
        .iter()
        .filter(|v| v.severity == Severity::Warning)
    {
        warn!("{v}");
    }
    let errors: Vec<String> = violations
        .iter()
        .filter(|v| v.severity == Severity::Error)
        .map(ToString::to_string)
        .collect();
    if !errors.is_empty() {
        return Err(CliError::Config(errors.join("; ")));
    }
    Ok((problem, file.run))
}

pub fn parse_config(path: &Path) -> Result<(Problem, RunSection), CliError> {
    let text =
        fs::read_to_string(path).map_err(|e| config_err(format!("{}: {e}", path.display())))?;
    parse_config_str(&text).map_err(|e| match e {
        CliError::Config(m) => CliError::Config(format!("{}: {m}", path.display())),
        other => other,
    })
}

/// Expands `start:step:stop`; `stop` is included when within `1e-9` of a step multiple.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [start, step, stop] = parts.as_slice() else {
        return Err(config_err(format!(
            "grid `{spec}` is not of the form start:step:stop"
        )));
    };
    let num = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|_| config_err(format!("grid `{spec}`: `{s}` is not a number")))
    };
    let (start, step, stop) = (num(start)?, num(step)?, num(stop)?);
    if !(step > 0.0) || !start.is_finite() || !stop.is_finite() || stop < start {
        return Err(config_err(format!(
            "grid `{spec}` must have step > 0 and stop ≥ start"
        )));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|k| tidy(start + k as f64 * step)).collect())
}

/// Strips accumulated binary noise such as `0.30000000000000004`.
fn tidy(v: f64) -> f64 {
    format!("{v:.12e}").parse().unwrap_or(v)
}

/// Resolves CLI flags over the config `run` section over case defaults.
pub fn resolve(args: &RunArgs) -> Result<RunConfig, CliError> {
    let (problem, section, case_x, case_t) = match (args.case, &args.config) {
        (Some(id), None) => {
            let case = case_library(id).map_err(config_err)?;
            (
                case.problem,
                RunSection::default(),
                Some(case.x_values),
                Some(case.t_values),
            )
        }
        (None, Some(path)) => {
            let (p, s) = parse_config(path)?;
            (p, s, None, None)
        }
        _ => return Err(config_err("exactly one of --case and --config is required")),
    };
    let x_values = match args.x.as_deref().or(section.x.as_deref()) {
        Some(spec) => parse_grid(spec)?,
        None => case_x.ok_or_else(|| config_err("no x grid given (use --x or run.x)"))?,
    };
    let t_values = args
        .t
        .clone()
        .or(section.t.clone())
        .or(case_t)
        .ok_or_else(|| config_err("no output times given (use --t or run.t)"))?;
    let solvers = args
        .solvers
        .clone()
        .or(section.solvers.clone())
        .unwrap_or_else(|| vec![SolverKind::Salt]);
    if solvers.is_empty() {
        return Err(config_err("at least one solver is required"));
    }
    if x_values.is_empty() || t_values.is_empty() {
        return Err(config_err("the x grid and the time list must be non-empty"));
    }
    for &x in &x_values {
        problem.check_position(x).map_err(config_err)?;
    }
    for &t in &t_values {
        if !(t >= 0.0) || !t.is_finite() {
            return Err(config_err(format!(
                "time {t} must be non-negative and finite"
            )));
        }
    }
    if t_values.windows(2).any(|w| w[1] <= w[0]) {
        return Err(config_err("output times must be strictly ascending"));
    }
    let order = args.order.or(section.order).unwrap_or(DEFAULT_ORDER);
    cf_quadrature(order).map_err(config_err)?;
    Ok(RunConfig {
        problem,
        solvers,
        x_values,
        t_values,
        order,
        nodes: args.nodes.or(section.n).unwrap_or(DEFAULT_NODES),
        output: args
            .out
            .clone()
            .or(section.output)
            .unwrap_or_else(|| PathBuf::from(".")),
        report: args.report,
        gnuplot: args.gnuplot,
    })
}

/// Runs every selected solver on the configured grid.
pub fn solve(config: &RunConfig) -> Result<Vec<SolutionGrid>, CliError> {
    let p = &config.problem;
    let (xs, ts) = (&config.x_values, &config.t_values);
    config
        .solvers
        .iter()
        .map(|s| {
            Ok(match s {
                SolverKind::Salt => solve_grid(p, &cf_quadrature(config.order)?, xs, ts)?,
                SolverKind::Fvm => fvm_solve_at(p, config.nodes, xs, ts)?,
                SolverKind::Steady => solve_steady(p)?.to_grid(xs, ts)?,
            })
        })
        .collect()
}

/// Ten significant digits: enough for a `1e-9` relative round trip.
fn fmt_value(v: f64) -> String {
    format!("{v:.9e}")
}

pub fn profile_csv(grid: &SolutionGrid) -> String {
    let mut out = String::from("x");
    for t in &grid.t_values {
        write!(out, ",t={t}").unwrap();
    }
    out.push('\n');
    for (j, x) in grid.x_values.iter().enumerate() {
        write!(out, "{x}").unwrap();
        for row in &grid.values {
            write!(out, ",{}", fmt_value(row[j])).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn table5_csv(grids: &[SolutionGrid]) -> String {
    let mut out = String::from("x,t");
    for g in grids {
        write!(out, ",{}", g.provenance.label()).unwrap();
    }
    out.push('\n');
    let Some(first) = grids.first() else {
        return out;
    };
    for (i, t) in first.t_values.iter().enumerate() {
        for (j, x) in first.x_values.iter().enumerate() {
            write!(out, "{x},{t}").unwrap();
            for g in grids {
                write!(out, ",{:.3}", g.values[i][j]).unwrap();
            }
            out.push('\n');
        }
    }
    out
}

pub fn compare_csv(grids: &[SolutionGrid]) -> Result<String, CliError> {
    let mut pairs = Vec::new();
    for (a, ga) in grids.iter().enumerate() {
        for gb in &grids[a + 1..] {
            let label = format!("{}-{}", ga.provenance.label(), gb.provenance.label());
            pairs.push((label, ga.max_abs_diff_per_time(gb)?));
        }
    }
    let mut out = String::from("t");
    for (label, _) in &pairs {
        write!(out, ",{label}").unwrap();
    }
    out.push('\n');
    if let Some(first) = grids.first() {
        for (i, t) in first.t_values.iter().enumerate() {
            write!(out, "{t}").unwrap();
            for (_, diffs) in &pairs {
                write!(out, ",{}", fmt_value(diffs[i])).unwrap();
            }
            out.push('\n');
        }
    }
    Ok(out)
}

pub fn gnuplot_script(grids: &[SolutionGrid]) -> String {
    let mut out = String::from(
        "set datafile separator ','\nset key autotitle columnhead\nset xlabel 'x'\nset ylabel 'c/c0'\nplot \\\n",
    );
    let mut series = Vec::new();
    for g in grids {
        let style = match g.provenance.label() {
            "salt" => "lines",
            _ => "points",
        };
        for col in 0..g.t_values.len() {
            series.push(format!(
                "  '{}.csv' using 1:{} with {style}",
                g.provenance.label(),
                col + 2
            ));
        }
    }
    out.push_str(&series.join(", \\\n"));
    out.push('\n');
    out
}

/// Writes every output file; on failure all files of this run are removed.
pub fn write_outputs(config: &RunConfig, grids: &[SolutionGrid]) -> Result<Vec<PathBuf>, CliError> {
    let mut files: Vec<(PathBuf, String)> = grids
        .iter()
        .map(|g| {
            (
                config.output.join(format!("{}.csv", g.provenance.label())),
                profile_csv(g),
            )
        })
        .collect();
    match config.report {
        ReportMode::Profiles => {}
        ReportMode::Table5 => files.push((config.output.join("table5.csv"), table5_csv(grids))),
        ReportMode::TableCompare => {
            files.push((config.output.join("compare.csv"), compare_csv(grids)?))
        }
    }
    if config.gnuplot {
        files.push((config.output.join("plot.gp"), gnuplot_script(grids)));
    }
    let io = |path: &Path| {
        let path = path.to_path_buf();
        move |source| CliError::Io { path, source }
    };
    fs::create_dir_all(&config.output).map_err(io(&config.output))?;
    let mut written = Vec::new();
    for (path, body) in &files {
        if let Err(e) = fs::write(path, body) {
            for w in &written {
                let _ = fs::remove_file(w);
            }
            let _ = fs::remove_file(path);
            return Err(io(path)(e));
        }
        written.push(path.clone());
    }
    Ok(written)
}

pub fn run(args: &RunArgs) -> Result<Vec<PathBuf>, CliError> {
    let config = resolve(args)?;
    let grids = solve(&config)?;
    write_outputs(&config, &grids)
}

/// Entry point shared by the binary and the tests; returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { 0 };
        }
    };
    match cli.command {
        Command::Run(args) => match run(&args) {
            Ok(files) => {
                for f in files {
                    println!("{}", f.display());
                }
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                e.exit_code()
            }
        },
    }
}
