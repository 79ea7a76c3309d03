//! Argument parsing and command dispatch for the `otsuki` binary.
//!
//! Every command produces a table of rows, rendered either as CSV (header plus
//! comma-separated lines) or as `{"n": .., "command": .., "rows": [..]}`. The
//! profile command instead emits the curve CSV or a mesh OBJ.

use std::f64::consts::SQRT_2;
use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{Map, Value};

use otsuki::bounds::{self, CertificateReport, DEFAULT_ENVELOPE_SAMPLES};
use otsuki::geometry::{self, critical_parameter, QuadratureOptions, RotationSpec, ShapeParameter};
use otsuki::numerics::quadrature::MIN_NODES;
use otsuki::profile::{
    self, DEFAULT_CIRCLE_SAMPLES, DEFAULT_STEPS_PER_PERIOD, MIN_CIRCLE_SAMPLES, MIN_STEPS_PER_PERIOD,
};
use otsuki::shrinker;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

pub const THREADS_ENV: &str = "OTSUKI_THREADS";
pub const MAX_TOLERANCE: f64 = 1e-3;
pub const MAX_DIMENSION: u32 = 64;
/// Relative distance from `0` and `a0` of the default scan range.
pub const DEFAULT_SCAN_MARGIN: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Scan,
    Solve,
    Catalog,
    Verify,
    Entropy,
    Profile,
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Command::Scan => "scan",
            Command::Solve => "solve",
            Command::Catalog => "catalog",
            Command::Verify => "verify",
            Command::Entropy => "entropy",
            Command::Profile => "profile",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    #[value(name = "1")]
    One,
    #[value(name = "3")]
    Three,
    #[value(name = "4")]
    Four,
    Bounds,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Export {
    Csv,
    Obj,
}

/// Validated settings for one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub n: u32,
    pub p: Option<u32>,
    pub s: Option<u32>,
    pub a: Option<f64>,
    pub a_min: Option<f64>,
    pub a_max: Option<f64>,
    pub grid_steps: usize,
    pub quad_nodes: usize,
    pub ode_steps: usize,
    pub tol: f64,
    pub format: Format,
    pub output_path: Option<PathBuf>,
    pub theorem: Option<Theorem>,
    pub max_s: u32,
    pub export: Export,
    pub copies: Option<usize>,
    pub circle_samples: usize,
    pub precision: Option<usize>,
}

impl RunConfig {
    fn options(&self) -> QuadratureOptions {
        QuadratureOptions { nodes: self.quad_nodes }
    }

    fn spec(&self) -> Option<RotationSpec> {
        match (self.p, self.s) {
            (Some(p), Some(s)) => RotationSpec::new(p, s).ok(),
            _ => None,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "otsuki",
    version,
    about = "Compact minimal rotational hypersurfaces in the unit sphere"
)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, Args)]
struct Common {
    /// Dimension of the hypersurface.
    #[arg(long)]
    n: u32,
    /// Gauss-Legendre nodes for the period integrals.
    #[arg(long, default_value_t = 128)]
    quad_nodes: usize,
    /// Tolerance when inverting the period map.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Round printed values to this many significant digits.
    #[arg(long)]
    precision: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Period, rotation and area density across a range of moduli.
    Scan {
        #[command(flatten)]
        common: Common,
        /// Smallest modulus; defaults just above zero.
        #[arg(long)]
        a_min: Option<f64>,
        /// Largest modulus; defaults just below a0.
        #[arg(long)]
        a_max: Option<f64>,
        /// Number of moduli.
        #[arg(long, default_value_t = 200)]
        grid_steps: usize,
    },
    /// Modulus and area of the compact member with rotation number p and s folds.
    Solve {
        #[command(flatten)]
        common: Common,
        /// Rotation number.
        #[arg(long)]
        p: u32,
        /// Number of folds.
        #[arg(long)]
        s: u32,
    },
    /// Every compact member with at most max-s folds, sorted by area.
    Catalog {
        #[command(flatten)]
        common: Common,
        /// Largest fold count.
        #[arg(long, default_value_t = 20)]
        max_s: u32,
    },
    /// Numerical certificates for the area bounds.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Restrict to one claim family; all are checked when absent.
        #[arg(long, value_enum)]
        theorem: Option<Theorem>,
        /// Largest fold count for the sharpened bound.
        #[arg(long, default_value_t = 50)]
        max_s: u32,
        /// Moduli sampled for the lower bound.
        #[arg(long, default_value_t = 200)]
        grid_steps: usize,
    },
    /// Cone entropies of the sphere, the Clifford hypersurface and the catalog.
    Entropy {
        #[command(flatten)]
        common: Common,
        /// Largest fold count.
        #[arg(long, default_value_t = 20)]
        max_s: u32,
    },
    /// Profile curve (CSV) or stereographic mesh (OBJ, n = 2 only).
    Profile {
        #[command(flatten)]
        common: Common,
        /// Rotation number.
        #[arg(long)]
        p: Option<u32>,
        /// Number of folds.
        #[arg(long)]
        s: Option<u32>,
        /// Modulus, for a curve that need not close up.
        #[arg(long)]
        a: Option<f64>,
        /// Curve or mesh.
        #[arg(long, value_enum, default_value_t = Export::Csv)]
        export: Export,
        /// Periods to trace; defaults to s, or 1 with --a.
        #[arg(long)]
        copies: Option<usize>,
        /// Points around each orbit circle of the mesh.
        #[arg(long, default_value_t = DEFAULT_CIRCLE_SAMPLES)]
        circle_samples: usize,
        /// RK4 steps per period.
        #[arg(long, default_value_t = DEFAULT_STEPS_PER_PERIOD)]
        ode_steps: usize,
    },
}

#[derive(Debug)]
pub enum ArgsError {
    /// Clap's own outcome, including `--help` and `--version`.
    Clap(clap::Error),
    Invalid(String),
}

impl ArgsError {
    pub fn exit_code(&self) -> i32 {
        match self {
            ArgsError::Clap(e) if !e.use_stderr() => EXIT_OK,
            _ => EXIT_USAGE,
        }
    }
}

impl fmt::Display for ArgsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArgsError::Clap(e) => write!(f, "{e}"),
            ArgsError::Invalid(msg) => write!(f, "error: {msg}"),
        }
    }
}

fn invalid(msg: impl Into<String>) -> ArgsError {
    ArgsError::Invalid(msg.into())
}

pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, ArgsError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(ArgsError::Clap)?;
    let mut config = RunConfig {
        command: Command::Scan,
        n: 0,
        p: None,
        s: None,
        a: None,
        a_min: None,
        a_max: None,
        grid_steps: 200,
        quad_nodes: 128,
        ode_steps: DEFAULT_STEPS_PER_PERIOD,
        tol: 1e-10,
        format: Format::Csv,
        output_path: None,
        theorem: None,
        max_s: 20,
        export: Export::Csv,
        copies: None,
        circle_samples: DEFAULT_CIRCLE_SAMPLES,
        precision: None,
    };
    let common = match cli.command {
        Sub::Scan {
            common,
            a_min,
            a_max,
            grid_steps,
        } => {
            config.command = Command::Scan;
            config.a_min = a_min;
            config.a_max = a_max;
            config.grid_steps = grid_steps;
            common
        }
        Sub::Solve { common, p, s } => {
            config.command = Command::Solve;
            config.p = Some(p);
            config.s = Some(s);
            common
        }
        Sub::Catalog { common, max_s } => {
            config.command = Command::Catalog;
            config.max_s = max_s;
            common
        }
        Sub::Verify {
            common,
            theorem,
            max_s,
            grid_steps,
        } => {
            config.command = Command::Verify;
            config.theorem = theorem;
            config.max_s = max_s;
            config.grid_steps = grid_steps;
            common
        }
        Sub::Entropy { common, max_s } => {
            config.command = Command::Entropy;
            config.max_s = max_s;
            common
        }
        Sub::Profile {
            common,
            p,
            s,
            a,
            export,
            copies,
            circle_samples,
            ode_steps,
        } => {
            config.command = Command::Profile;
            config.p = p;
            config.s = s;
            config.a = a;
            config.export = export;
            config.copies = copies;
            config.circle_samples = circle_samples;
            config.ode_steps = ode_steps;
            common
        }
    };
    config.n = common.n;
    config.quad_nodes = common.quad_nodes;
    config.tol = common.tol;
    config.format = common.format;
    config.output_path = common.output;
    config.precision = common.precision;
    validate(&mut config)?;
    Ok(config)
}

fn validate(config: &mut RunConfig) -> Result<(), ArgsError> {
    let n = config.n;
    if !(2..=MAX_DIMENSION).contains(&n) {
        return Err(invalid(format!("--n must lie in 2..={MAX_DIMENSION} (got {n})")));
    }
    let a0 = critical_parameter(n).map_err(|e| invalid(e.to_string()))?;
    if !(config.tol > 0.0 && config.tol <= MAX_TOLERANCE) {
        return Err(invalid(format!(
            "--tol must lie in (0, {MAX_TOLERANCE}] (got {})",
            config.tol
        )));
    }
    if config.quad_nodes < MIN_NODES {
        return Err(invalid(format!("--quad-nodes must be at least {MIN_NODES}")));
    }
    if let Some(digits) = config.precision {
        if !(1..=17).contains(&digits) {
            return Err(invalid("--precision must lie in 1..=17"));
        }
    }
    match (config.p, config.s) {
        (Some(p), Some(s)) => {
            RotationSpec::new(p, s).map_err(|e| {
                invalid(format!(
                    "{e}; compact members need coprime p, s with 1/2 < p/s < sqrt(2)/2 ({:.6})",
                    SQRT_2 / 2.0
                ))
            })?;
        }
        (None, None) => {}
        _ => return Err(invalid("--p and --s must be given together")),
    }

    match config.command {
        Command::Scan => {
            let lo = config.a_min.unwrap_or(a0 * DEFAULT_SCAN_MARGIN);
            let hi = config.a_max.unwrap_or(a0 * (1.0 - DEFAULT_SCAN_MARGIN));
            if !(lo > 0.0 && lo < hi && hi < a0) {
                return Err(invalid(format!(
                    "scan range must satisfy 0 < a-min < a-max < a0 = {a0}"
                )));
            }
            if config.grid_steps < 2 {
                return Err(invalid("--grid-steps must be at least 2"));
            }
            config.a_min = Some(lo);
            config.a_max = Some(hi);
        }
        Command::Catalog | Command::Entropy => {
            if config.max_s < 3 {
                return Err(invalid("--max-s must be at least 3"));
            }
        }
        Command::Verify => {
            let needs_catalog = matches!(config.theorem, None | Some(Theorem::One) | Some(Theorem::Three));
            let floor = if matches!(config.theorem, None | Some(Theorem::Three)) {
                7
            } else {
                3
            };
            if needs_catalog && config.max_s < floor {
                return Err(invalid(format!("--max-s must be at least {floor} for this claim")));
            }
            if config.grid_steps < 1 {
                return Err(invalid("--grid-steps must be at least 1"));
            }
        }
        Command::Solve => {}
        Command::Profile => {
            if config.export == Export::Obj && n != 2 {
                return Err(invalid("OBJ export is available for n = 2 only"));
            }
            let has_spec = config.p.is_some();
            match (has_spec, config.a) {
                (true, Some(_)) => return Err(invalid("give either --p/--s or --a, not both")),
                (false, None) => return Err(invalid("profile needs --p/--s or --a")),
                (false, Some(a)) => {
                    if !(a > 0.0 && a < a0) {
                        return Err(invalid(format!("--a must lie in (0, a0) with a0 = {a0}")));
                    }
                    if config.export == Export::Obj {
                        return Err(invalid("OBJ export needs a compact member (--p/--s)"));
                    }
                }
                (true, None) => {}
            }
            if config.ode_steps < MIN_STEPS_PER_PERIOD {
                return Err(invalid(format!("--ode-steps must be at least {MIN_STEPS_PER_PERIOD}")));
            }
            if config.circle_samples < MIN_CIRCLE_SAMPLES {
                return Err(invalid(format!(
                    "--circle-samples must be at least {MIN_CIRCLE_SAMPLES}"
                )));
            }
            if config.copies == Some(0) {
                return Err(invalid("--copies must be at least 1"));
            }
        }
    }
    if config.command == Command::Solve && config.spec().is_none() {
        return Err(invalid("solve needs --p and --s"));
    }
    Ok(())
}

#[derive(Debug)]
enum RunError {
    Core(otsuki::Error),
    Io(io::Error),
    Usage(String),
}

impl From<otsuki::Error> for RunError {
    fn from(e: otsuki::Error) -> Self {
        RunError::Core(e)
    }
}

impl From<io::Error> for RunError {
    fn from(e: io::Error) -> Self {
        RunError::Io(e)
    }
}

impl RunError {
    fn exit_code(&self) -> i32 {
        match self {
            RunError::Core(e) if e.is_numerical_failure() => EXIT_NUMERICAL,
            RunError::Core(_) | RunError::Usage(_) => EXIT_USAGE,
            RunError::Io(_) => EXIT_FAILED,
        }
    }
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunError::Core(e) => write!(f, "{e}"),
            RunError::Io(e) => write!(f, "i/o error: {e}"),
            RunError::Usage(msg) => f.write_str(msg),
        }
    }
}

/// A rendered table with a fixed column order.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Map<String, Value>>,
}

impl Table {
    fn from_rows<T: Serialize>(columns: &[&'static str], rows: &[T]) -> Self {
        let rows = rows
            .iter()
            .map(
                |row| match serde_json::to_value(row).expect("rows serialise to objects") {
                    Value::Object(map) => columns
                        .iter()
                        .map(|c| (c.to_string(), map.get(*c).cloned().unwrap_or(Value::Null)))
                        .collect(),
                    _ => unreachable!("rows are structs"),
                },
            )
            .collect();
        Self {
            columns: columns.to_vec(),
            rows,
        }
    }

    fn round(&mut self, digits: usize) {
        for row in &mut self.rows {
            for value in row.values_mut() {
                if let Some(x) = value.as_f64().filter(|_| value.is_f64()) {
                    let rounded: f64 = format!("{:.*e}", digits - 1, x)
                        .parse()
                        .expect("formatted float parses");
                    *value = serde_json::Number::from_f64(rounded).map_or(Value::Null, Value::Number);
                }
            }
        }
    }
}

const SCAN_COLUMNS: &[&str] = &["a", "T", "K", "w", "area", "entropy", "clifford_ratio"];
const SUMMARY_COLUMNS: &[&str] = &["p", "s", "a", "T", "K", "w", "area", "entropy", "clifford_ratio"];
const REPORT_COLUMNS: &[&str] = &["claim", "passed", "margin", "samples", "detail"];
const ENTROPY_COLUMNS: &[&str] = &["source", "area", "entropy", "threshold", "exceeds_threshold"];

fn csv_cell(value: &Value) -> String {
    match value {
        Value::String(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

pub fn write_table<W: Write>(table: &Table, n: u32, command: Command, format: Format, mut out: W) -> io::Result<()> {
    match format {
        Format::Csv => {
            writeln!(out, "{}", table.columns.join(","))?;
            for row in &table.rows {
                let cells: Vec<String> = table.columns.iter().map(|c| csv_cell(&row[*c])).collect();
                writeln!(out, "{}", cells.join(","))?;
            }
        }
        Format::Json => {
            let mut doc = Map::new();
            doc.insert("n".into(), Value::from(n));
            doc.insert("command".into(), Value::from(command.to_string()));
            doc.insert(
                "rows".into(),
                Value::Array(table.rows.iter().cloned().map(Value::Object).collect()),
            );
            serde_json::to_writer(&mut out, &Value::Object(doc))?;
            writeln!(out)?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct EntropyRow {
    source: String,
    area: f64,
    entropy: f64,
    threshold: f64,
    exceeds_threshold: bool,
}

fn scan_table(config: &RunConfig) -> Result<Table, RunError> {
    let (lo, hi) = (config.a_min.expect("validated"), config.a_max.expect("validated"));
    let steps = config.grid_steps;
    let rows = (0..steps)
        .into_par_iter()
        .map(|i| {
            let a = if i + 1 == steps {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (steps - 1) as f64
            };
            geometry::scan_point(&ShapeParameter::new(config.n, a)?, config.options())
        })
        .collect::<otsuki::Result<Vec<_>>>()?;
    Ok(Table::from_rows(SCAN_COLUMNS, &rows))
}

fn solve_table(config: &RunConfig) -> Result<Table, RunError> {
    let spec = config.spec().expect("validated");
    let row = geometry::summarize_with(config.n, &spec, config.tol, config.options())?;
    Ok(Table::from_rows(SUMMARY_COLUMNS, &[row]))
}

fn catalog_table(config: &RunConfig) -> Result<Table, RunError> {
    let rows = geometry::catalog_with(config.n, config.max_s, config.tol, config.options())?;
    Ok(Table::from_rows(SUMMARY_COLUMNS, &rows))
}

fn entropy_table(config: &RunConfig) -> Result<Table, RunError> {
    let threshold = shrinker::entropy_threshold(config.n)?;
    let records = shrinker::entropy_table_with(config.n, config.max_s, config.tol, config.options())?;
    let rows: Vec<EntropyRow> = records
        .iter()
        .map(|r| EntropyRow {
            source: r.source.to_string(),
            area: r.area,
            entropy: r.entropy,
            threshold,
            exceeds_threshold: r.exceeds_threshold(threshold),
        })
        .collect();
    Ok(Table::from_rows(ENTROPY_COLUMNS, &rows))
}

fn verify_reports(config: &RunConfig) -> Result<Vec<CertificateReport>, RunError> {
    let (n, tol, options) = (config.n, config.tol, config.options());
    let wants = |t: Theorem| config.theorem.is_none_or(|chosen| chosen == t);
    let mut reports = Vec::new();
    if wants(Theorem::One) {
        let grid = bounds::uniform_a_grid(n, config.grid_steps)?;
        reports.push(bounds::certify_theorem1_with(n, &grid, options)?);
        reports.push(bounds::certify_corollary2_with(n, config.max_s, tol, options)?);
    }
    if wants(Theorem::Three) {
        reports.push(bounds::certify_theorem3_with(n, config.max_s, tol, options)?);
    }
    if wants(Theorem::Four) {
        reports.push(bounds::certify_theorem4_with(n, tol, options)?);
    }
    if wants(Theorem::Bounds) {
        let a0 = critical_parameter(n)?;
        let grid = [0.25, 0.5, 0.75].map(|f| f * a0);
        reports.extend(bounds::certify_envelopes(n, &grid, DEFAULT_ENVELOPE_SAMPLES)?);
    }
    Ok(reports)
}

fn profile_shape(config: &RunConfig) -> Result<(ShapeParameter, Option<RotationSpec>), RunError> {
    match config.spec() {
        Some(spec) => Ok((
            geometry::solve_shape_with(config.n, &spec, config.tol, config.options())?,
            Some(spec),
        )),
        None => Ok((ShapeParameter::new(config.n, config.a.expect("validated"))?, None)),
    }
}

fn write_profile<W: Write>(config: &RunConfig, out: W) -> Result<(), RunError> {
    let (shape, spec) = profile_shape(config)?;
    let path = profile::integrate_profile(&shape, config.ode_steps)?;
    match config.export {
        Export::Csv => {
            let copies = config.copies.unwrap_or_else(|| spec.map_or(1, |s| s.s() as usize));
            let rows = profile::export_profile_curve(&path, copies)?;
            profile::write_curve_csv(&rows, out)?;
        }
        Export::Obj => {
            let spec = spec.ok_or_else(|| RunError::Usage("OBJ export needs --p/--s".into()))?;
            let mesh = profile::export_mesh_s3(&path, &spec, config.circle_samples)?;
            profile::write_obj(&mesh, out)?;
        }
    }
    Ok(())
}

fn thread_pool() -> Result<rayon::ThreadPool, RunError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var(THREADS_ENV) {
        let threads: usize = raw
            .trim()
            .parse()
            .ok()
            .filter(|&t| t > 0)
            .ok_or_else(|| RunError::Usage(format!("{THREADS_ENV} must be a positive integer (got {raw:?})")))?;
        builder = builder.num_threads(threads);
    }
    builder
        .build()
        .map_err(|e| RunError::Usage(format!("cannot start worker pool: {e}")))
}

fn open_output(config: &RunConfig) -> Result<Box<dyn Write>, RunError> {
    Ok(match &config.output_path {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn execute(config: &RunConfig) -> Result<i32, RunError> {
    let pool = thread_pool()?;
    pool.install(|| {
        if config.command == Command::Profile {
            let mut out = open_output(config)?;
            write_profile(config, &mut out)?;
            out.flush()?;
            return Ok(EXIT_OK);
        }
        let mut status = EXIT_OK;
        let mut table = match config.command {
            Command::Scan => scan_table(config)?,
            Command::Solve => solve_table(config)?,
            Command::Catalog => catalog_table(config)?,
            Command::Entropy => entropy_table(config)?,
            Command::Verify => {
                let reports = verify_reports(config)?;
                if reports.iter().any(|r| !r.passed) {
                    status = EXIT_FAILED;
                }
                Table::from_rows(REPORT_COLUMNS, &reports)
            }
            Command::Profile => unreachable!("handled above"),
        };
        if let Some(digits) = config.precision {
            table.round(digits);
        }
        let mut out = open_output(config)?;
        write_table(&table, config.n, config.command, config.format, &mut out)?;
        out.flush()?;
        Ok(status)
    })
}

/// Runs a validated configuration and returns the process exit code.
/// Diagnostics go to stderr.
pub fn run(config: &RunConfig) -> i32 {
    match execute(config) {
        Ok(code) => code,
        // A closed downstream pipe (`| head`) is not an error of ours.
        Err(RunError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
