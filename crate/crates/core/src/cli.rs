//! The `sphaera` command line: make, measure, check, verify, search.
//!
//! Exit codes: 0 pass, 1 property failed, 2 usage or precondition error.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::body::{convex_hull, Body};
use crate::io::{self, IoError, ProfileKind};
use crate::report::{CheckReport, ProfileSample};
use crate::reuleaux::{ball, random_reuleaux, regular_reuleaux, ReuleauxSpec};
use crate::sphere::SpherePoint;
use crate::suite::{self, SuiteConfig};
use crate::tolerance::{DEFAULT_CHECK_TOL, DEFAULT_GRID, DEFAULT_SAMPLES};
use crate::width;

#[derive(Debug, Parser)]
#[command(name = "sphaera", version, about = "Convex bodies of constant width and constant diameter on the sphere")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Verdict tolerance in radians.
    #[arg(long = "tol", visible_alias = "tolerance", global = true, default_value_t = DEFAULT_CHECK_TOL)]
    pub tol: f64,
    /// Boundary samples for checkers and profiles.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,
    /// Grid size for brute-force oracles.
    #[arg(long, global = true, default_value_t = DEFAULT_GRID)]
    pub grid: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output path.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct a body and write its JSON.
    Make {
        #[command(subcommand)]
        kind: MakeKind,
    },
    /// Print diameter or thickness, or export a profile.
    Measure { body: PathBuf, what: Measure },
    /// Run a checker and print its report as JSON.
    Check { body: PathBuf, which: Check },
    /// Run the verification matrix and print a pass/fail table.
    Verify,
    /// Check random bodies with both checkers and log the results as JSON lines.
    Search {
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum MakeKind {
    Ball {
        #[arg(long)]
        rho: f64,
        #[arg(long, value_parser = parse_point, default_value = "0,0,1")]
        center: SpherePoint,
    },
    Reuleaux {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: f64,
    },
    /// Seeded non-regular Reuleaux polygon.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: f64,
        #[arg(long, default_value_t = 0.08)]
        jitter: f64,
    },
    /// Convex hull of the given points.
    Hull {
        #[arg(long = "point", value_parser = parse_point, required = true)]
        points: Vec<SpherePoint>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Measure {
    Diameter,
    Thickness,
    WidthProfile,
    DiameterProfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    ConstantWidth,
    ConstantDiameter,
    Strict,
    Prop2,
    Correspondence,
    Lemma,
}

fn parse_point(s: &str) -> Result<SpherePoint, String> {
    let parts: Vec<f64> =
        s.split(',').map(|t| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"))).collect::<Result<_, _>>()?;
    let [x, y, z] = parts[..] else {
        return Err(format!("expected x,y,z, got {s:?}"));
    };
    SpherePoint::new(x, y, z).map_err(|e| e.to_string())
}

/// Outcome of a command, mapped to the exit code.
#[derive(Debug)]
enum Outcome {
    Pass,
    Fail,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Geometry(#[from] crate::Error),
    #[error("{0}")]
    File(#[from] std::io::Error),
}

impl RunConfig {
    fn suite(&self) -> SuiteConfig {
        SuiteConfig { tol: self.tol, samples: self.samples, grid: self.grid, seed: self.seed }
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn make(kind: &MakeKind, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let (body, summary): (Body, String) = match kind {
        MakeKind::Ball { rho, center } => (ball(*center, *rho)?, format!("ball: rho = {rho}, 1 arc")),
        MakeKind::Reuleaux { n, delta } => {
            let b = regular_reuleaux(&ReuleauxSpec::new(*n, *delta))?;
            (b, format!("reuleaux: delta = {delta}, {n} arcs"))
        }
        MakeKind::Random { n, delta, jitter } => {
            let spec = ReuleauxSpec::new(*n, *delta).with_seed(cfg.seed).with_jitter(*jitter);
            let b = random_reuleaux(&spec)?;
            (b, format!("random reuleaux: delta = {delta}, {n} arcs, seed {}", cfg.seed))
        }
        MakeKind::Hull { points } => {
            let h = convex_hull(points)?;
            let n = h.vertices().len();
            (h.into(), format!("polygon: {n} vertices"))
        }
    };
    let mut text = io::body_to_json(&body);
    text.push('\n');
    match &cfg.out {
        Some(p) => {
            fs::write(p, text)?;
            println!("{summary}");
        }
        None => {
            print!("{text}");
            eprintln!("{summary}");
        }
    }
    Ok(Outcome::Pass)
}

fn emit_profile(kind: ProfileKind, profile: &[ProfileSample], cfg: &RunConfig) -> Result<(), CliError> {
    let min = profile.iter().map(|s| s.value).fold(f64::INFINITY, f64::min);
    let max = profile.iter().map(|s| s.value).fold(f64::NEG_INFINITY, f64::max);
    let text = match cfg.format.unwrap_or(Format::Csv) {
        Format::Csv => io::profile_csv(kind, profile),
        Format::Json => {
            let rows: Vec<(usize, [f64; 3], f64)> =
                profile.iter().enumerate().map(|(i, s)| (i, s.point.xyz(), s.value)).collect();
            serde_json::to_string(&rows).expect("profile serializes") + "\n"
        }
    };
    if let Some(p) = &cfg.out {
        fs::write(p, text)?;
        println!("{} samples, min = {min:.8} rad, max = {max:.8} rad", profile.len());
    } else {
        print!("{text}");
    }
    Ok(())
}

fn measure(path: &Path, what: Measure, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let body = io::load_body(path)?;
    match what {
        Measure::Diameter => println!("diameter = {:.8} rad", width::diameter_with(&body, cfg.samples).value),
        Measure::Thickness => println!("thickness = {:.8} rad", width::thickness_with(&body, cfg.samples)),
        Measure::WidthProfile => emit_profile(ProfileKind::Width, &width::width_profile(&body, cfg.samples)?, cfg)?,
        Measure::DiameterProfile => {
            emit_profile(ProfileKind::Diameter, &width::diameter_profile(&body, cfg.samples), cfg)?
        }
    }
    Ok(Outcome::Pass)
}

fn check(path: &Path, which: Check, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let body = io::load_body(path)?;
    let report: CheckReport = match which {
        Check::ConstantWidth => width::check_constant_width_with(&body, cfg.tol, cfg.samples),
        Check::ConstantDiameter => width::check_constant_diameter_with(&body, cfg.tol, cfg.samples),
        Check::Strict => body.is_strictly_convex(),
        Check::Prop2 => width::check_chord_intersections(&body)?,
        Check::Correspondence => suite::check_correspondence(&body, 100, cfg.tol)?,
        Check::Lemma => suite::check_lemma(&body, 64, 360)?,
    };
    if cfg.format == Some(Format::Csv) && !report.profile.is_empty() {
        let kind = match which {
            Check::ConstantWidth => ProfileKind::Width,
            _ => ProfileKind::Diameter,
        };
        write_out(cfg.out.as_deref(), &io::profile_csv(kind, &report.profile))?;
    } else {
        write_out(cfg.out.as_deref(), &(report.to_json() + "\n"))?;
    }
    Ok(if report.verdict { Outcome::Pass } else { Outcome::Fail })
}

fn verify(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let report = suite::verify(&cfg.suite())?;
    let text = match cfg.format {
        Some(Format::Json) => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        _ => format!("{report}\n"),
    };
    write_out(cfg.out.as_deref(), &text)?;
    Ok(if report.passed() { Outcome::Pass } else { Outcome::Fail })
}

fn search(count: usize, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let entries = suite::search(count, &cfg.suite())?;
    let disagree = entries.iter().filter(|e| !e.agree).count();
    let log = suite::search_jsonl(&entries);
    let summary = format!("{count} bodies, {disagree} disagreements");
    match &cfg.out {
        Some(p) => {
            fs::write(p, log)?;
            println!("{summary}");
        }
        None => {
            print!("{log}");
            eprintln!("{summary}");
        }
    }
    Ok(if disagree == 0 { Outcome::Pass } else { Outcome::Fail })
}

fn validate(cfg: &RunConfig) -> Result<(), CliError> {
    let bad = |m: String| Err(CliError::Geometry(crate::Error::PrecondViolation(m)));
    if !(cfg.tol > 0.0 && cfg.tol.is_finite()) {
        return bad(format!("tolerance must be positive, got {}", cfg.tol));
    }
    if cfg.samples < 64 {
        return bad(format!("samples must be at least 64, got {}", cfg.samples));
    }
    if cfg.grid < 1000 {
        return bad(format!("grid must be at least 1000, got {}", cfg.grid));
    }
    Ok(())
}

pub fn execute(cli: &Cli) -> ExitCode {
    let cfg = &cli.config;
    let result = validate(cfg).and_then(|()| match &cli.command {
        Command::Make { kind } => make(kind, cfg),
        Command::Measure { body, what } => measure(body, *what, cfg),
        Command::Check { body, which } => check(body, *which, cfg),
        Command::Verify => verify(cfg),
        Command::Search { count } => search(*count, cfg),
    });
    match result {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Parses arguments and runs; clap usage errors exit with code 2.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let _ = env_logger::Builder::from_env(env_logger::Env::new().filter_or("SPHAERA_LOG", "warn")).try_init();
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let _ = e.print();
            ExitCode::from(if e.use_stderr() { 2 } else { 0 })
        }
    }
}
