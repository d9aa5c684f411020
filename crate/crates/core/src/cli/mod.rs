//! Command-line front end: argument parsing, record I/O and the subcommands.
//!
//! Every command returns its output as a string plus an exit code so it can
//! be driven from tests; [`run`] does the file and stream handling.

mod format;
mod input;
mod output;
mod selfcheck;
mod svg;
mod sweep;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::classify::DEFAULT_TOL;

pub use input::{parse_records, Convention, StateFileRecord};
pub use selfcheck::{run_checks, Check};
pub use sweep::{parse_sweep, run_sweep, sweep_points, SweepLeg, SweepPoint, SweepSpec};

/// Environment variable overriding the default tolerance.
pub const TOL_ENV: &str = "STELLAR_TOL";

#[derive(Debug, Parser)]
#[command(name = "stellar", version, about = "Majorana constellations of symmetric qubit states")]
pub struct Cli {
    /// Clustering and classification tolerance (overrides STELLAR_TOL).
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    /// Process records in parallel; output order is unchanged.
    #[arg(long, global = true)]
    pub parallel: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Class label, multiplicity partition, symmetry and depressed form per state.
    Classify {
        /// JSON lines or a JSON array of state records; `-` for stdin.
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Entanglement quantity D_ent and its decomposition per state.
    Measure {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Star positions as JSON, or a two-hemisphere SVG drawing.
    Constellation {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = PlotFormat::Json)]
        format: PlotFormat,
        /// Output file; for SVG with several records, a directory.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Move stars along straight lines and report class and D_ent as CSV.
    Sweep {
        spec: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Built-in consistency checks; exits 1 if any fails.
    Selfcheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotFormat {
    Json,
    Svg,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Parse(String),
    Math(String),
    Io(String),
    Selfcheck(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Selfcheck(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Math(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Math(m) => write!(f, "math error: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Selfcheck(m) => write!(f, "selfcheck failed: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Options {
    pub tol: f64,
    pub parallel: bool,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            parallel: false,
        }
    }
}

/// Command output and the exit code it implies.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub body: String,
    pub code: i32,
}

/// Flag, then `STELLAR_TOL`, then the default.
pub fn resolve_tol(flag: Option<f64>) -> Result<f64, CliError> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var(TOL_ENV) {
            Ok(s) => s
                .trim()
                .parse::<f64>()
                .map_err(|e| CliError::Parse(format!("{TOL_ENV}={s:?}: {e}")))?,
            Err(_) => DEFAULT_TOL,
        },
    };
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(CliError::Parse(format!("tolerance must be positive, got {tol}")));
    }
    Ok(tol)
}

fn map_records<T, F>(records: &[StateFileRecord], opts: &Options, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize, &StateFileRecord) -> T + Sync + Send,
{
    if opts.parallel {
        records.par_iter().enumerate().map(|(i, r)| f(i, r)).collect()
    } else {
        records.iter().enumerate().map(|(i, r)| f(i, r)).collect()
    }
}

fn json_lines(lines: Vec<(String, bool)>) -> (String, usize) {
    let mut body = String::new();
    let mut failures = 0;
    for (line, ok) in lines {
        body.push_str(&line);
        body.push('\n');
        if !ok {
            failures += 1;
        }
    }
    (body, failures)
}

/// One JSON line per record. Exit 3 if any record fails.
pub fn cmd_classify(text: &str, opts: &Options) -> Result<Report, CliError> {
    let records = parse_records(text)?;
    let lines = map_records(&records, opts, |i, r| output::classify_line(i, r, opts.tol));
    let (body, failures) = json_lines(lines);
    Ok(Report {
        body,
        code: if failures > 0 { 3 } else { 0 },
    })
}

/// One JSON line per record. Exit 3 only if every record fails.
pub fn cmd_measure(text: &str, opts: &Options) -> Result<Report, CliError> {
    let records = parse_records(text)?;
    let lines = map_records(&records, opts, |i, r| output::measure_line(i, r));
    let total = lines.len();
    let (body, failures) = json_lines(lines);
    Ok(Report {
        body,
        code: if total > 0 && failures == total { 3 } else { 0 },
    })
}

/// JSON lines of stars.
pub fn cmd_constellation_json(text: &str, opts: &Options) -> Result<Report, CliError> {
    let records = parse_records(text)?;
    let lines = map_records(&records, opts, |i, r| output::constellation_line(i, r, opts.tol));
    let (body, failures) = json_lines(lines);
    Ok(Report {
        body,
        code: if failures > 0 { 3 } else { 0 },
    })
}

/// One SVG document per record, named by id or index.
pub fn cmd_constellation_svg(text: &str, opts: &Options) -> Result<Vec<(String, String)>, CliError> {
    let records = parse_records(text)?;
    let docs = map_records(&records, opts, |i, r| {
        let name = svg::file_name(i, r.id.as_deref());
        svg::render_record(r, opts.tol).map(|doc| (name, doc))
    });
    docs.into_iter().collect()
}

pub fn cmd_sweep(text: &str, opts: &Options) -> Result<Report, CliError> {
    let spec = parse_sweep(text)?;
    run_sweep(&spec, opts)
}

pub fn cmd_selfcheck(opts: &Options) -> Report {
    let checks = run_checks(opts.tol);
    let mut body = String::new();
    for c in &checks {
        body.push_str(&c.line());
        body.push('\n');
    }
    let failed: Vec<&str> = checks.iter().filter(|c| !c.ok).map(|c| c.name).collect();
    if failed.is_empty() {
        body.push_str("selfcheck: all checks passed\n");
    } else {
        body.push_str(&format!("selfcheck: failed: {}\n", failed.join(", ")));
    }
    Report {
        body,
        code: if failed.is_empty() { 0 } else { 1 },
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
    }
}

fn write_output(path: Option<&Path>, body: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, body).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => stdout
            .write_all(body.as_bytes())
            .map_err(|e| CliError::Io(format!("stdout: {e}"))),
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let opts = Options {
        tol: resolve_tol(cli.tol)?,
        parallel: cli.parallel,
    };
    let report = match &cli.command {
        Command::Classify { input, output } => {
            let r = cmd_classify(&read_input(input)?, &opts)?;
            write_output(output.as_deref(), &r.body, stdout)?;
            r.code
        }
        Command::Measure { input, output } => {
            let r = cmd_measure(&read_input(input)?, &opts)?;
            write_output(output.as_deref(), &r.body, stdout)?;
            r.code
        }
        Command::Constellation {
            input,
            format: PlotFormat::Json,
            output,
        } => {
            let r = cmd_constellation_json(&read_input(input)?, &opts)?;
            write_output(output.as_deref(), &r.body, stdout)?;
            r.code
        }
        Command::Constellation {
            input,
            format: PlotFormat::Svg,
            output,
        } => {
            let docs = cmd_constellation_svg(&read_input(input)?, &opts)?;
            match (docs.as_slice(), output.as_deref()) {
                ([(_, doc)], out) if out.map_or(true, |p| !p.is_dir()) => {
                    write_output(out, doc, stdout)?
                }
                (_, Some(dir)) => {
                    fs::create_dir_all(dir)
                        .map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
                    for (name, doc) in &docs {
                        write_output(Some(&dir.join(name)), doc, stdout)?;
                    }
                }
                (_, None) => {
                    return Err(CliError::Parse(
                        "several records: pass --output DIR for SVG".to_string(),
                    ))
                }
            }
            0
        }
        Command::Sweep { spec, output } => {
            let r = cmd_sweep(&read_input(spec)?, &opts)?;
            write_output(output.as_deref(), &r.body, stdout)?;
            r.code
        }
        Command::Selfcheck => {
            let r = cmd_selfcheck(&opts);
            write_output(None, &r.body, stdout)?;
            r.code
        }
    };
    Ok(report)
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match execute(cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "stellar: {e}");
            e.exit_code()
        }
    }
}
