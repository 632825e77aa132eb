//! Command-line front end.
//!
//! Subcommands: `run` (explicit script files), `corpus` (the bundled
//! scripts), `parse` (diagnostics only). Exit codes are a pure function of
//! the outcome class:
//!
//! * 0 — every script's verdict is pass
//! * 1 — at least one verdict failure
//! * 2 — parse/semantic error in a script (or a kind mismatch at evaluation)
//! * 3 — I/O error or bad flags
//! * 4 — sampler exhausted, or more than 1% of trials degenerate-skipped

pub mod corpus;
pub mod report;
pub mod runner;

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use geocheck_core::centers::Triangle;
use geocheck_core::dsl::{self, Script};
use geocheck_core::engine::{EngineError, TrialReport, Verdict};
use geocheck_core::geom::Point;

use report::ReportContext;
use runner::RunOptions;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VERDICT_FAILURE: i32 = 1;
pub const EXIT_PARSE_ERROR: i32 = 2;
pub const EXIT_CONFIG_ERROR: i32 = 3;
pub const EXIT_DEGENERATE: i32 = 4;

/// Runs with more than this fraction of degenerate-skipped trials exit 4:
/// at default settings that indicates a sampler or floor bug.
const MAX_DEGENERATE_FRACTION: f64 = 0.01;

#[derive(Parser)]
#[command(
    name = "geocheck",
    version,
    about = "Falsification-test classical triangle constructions from .geo scripts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run construction scripts over randomly sampled acute triangles.
    Run(RunArgs),
    /// Run the bundled corpus of construction scripts.
    Corpus(CorpusArgs),
    /// Parse scripts and report diagnostics without running them.
    Parse(ParseArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Args, Clone)]
struct SharedArgs {
    /// Number of sampled trials per script (default 10000; exactly 1 with --fixed).
    #[arg(long)]
    trials: Option<u64>,

    /// Base seed for the deterministic per-trial derivation.
    #[arg(long, default_value_t = 42)]
    seed: u64,

    /// Relative tolerance for assertion residuals, in (0, 1e-2].
    #[arg(long, default_value_t = 1e-9)]
    epsilon: f64,

    /// Report format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Run a single trial on this explicit triangle: "x,y x,y x,y".
    #[arg(long, value_name = "x,y x,y x,y")]
    fixed: Option<String>,

    /// Worker threads; any value produces byte-identical reports.
    #[arg(long, default_value_t = 1)]
    jobs: usize,

    /// Minimum pairwise arc separation of sampled vertices, in (0, 2π/3).
    #[arg(long, default_value_t = 0.15)]
    min_arc: f64,

    /// Sample obtuse triangles too (exploratory; drops the acuteness bound).
    #[arg(long)]
    allow_obtuse: bool,
}

#[derive(Args)]
struct RunArgs {
    /// Script files (.geo).
    #[arg(required = true)]
    files: Vec<PathBuf>,

    #[command(flatten)]
    shared: SharedArgs,
}

#[derive(Args)]
struct CorpusArgs {
    #[command(flatten)]
    shared: SharedArgs,
}

#[derive(Args)]
struct ParseArgs {
    /// Script files (.geo).
    #[arg(required = true)]
    files: Vec<PathBuf>,
}

/// Entry point behind `main`; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_PASS,
                _ => EXIT_CONFIG_ERROR,
            };
            let _ = err.print();
            return code;
        }
    };
    match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Corpus(args) => cmd_corpus(args),
        Command::Parse(args) => cmd_parse(args),
    }
}

fn parse_fixed(text: &str) -> Result<Triangle, String> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    if parts.len() != 3 {
        return Err(format!(
            "--fixed needs exactly 3 points \"x,y x,y x,y\", found {}",
            parts.len()
        ));
    }
    let mut points = [Point::new(0.0, 0.0); 3];
    for (slot, part) in points.iter_mut().zip(&parts) {
        let Some((x, y)) = part.split_once(',') else {
            return Err(format!("--fixed point '{}' is not of the form x,y", part));
        };
        let x: f64 = x
            .trim()
            .parse()
            .map_err(|_| format!("--fixed: bad coordinate '{}'", x))?;
        let y: f64 = y
            .trim()
            .parse()
            .map_err(|_| format!("--fixed: bad coordinate '{}'", y))?;
        if !x.is_finite() || !y.is_finite() {
            return Err(String::from("--fixed coordinates must be finite"));
        }
        *slot = Point::new(x, y);
    }
    Ok(Triangle::new(points[0], points[1], points[2]))
}

fn build_options(shared: &SharedArgs) -> Result<RunOptions, String> {
    let fixed = match &shared.fixed {
        Some(text) => Some(parse_fixed(text)?),
        None => None,
    };
    let trials = match (fixed.is_some(), shared.trials) {
        (true, Some(t)) if t > 1 => {
            return Err(String::from(
                "--fixed runs exactly one trial and conflicts with --trials > 1",
            ))
        }
        (true, _) => 1,
        (false, Some(0)) => return Err(String::from("--trials must be at least 1")),
        (false, Some(t)) => t,
        (false, None) => 10_000,
    };
    if !(shared.epsilon > 0.0 && shared.epsilon <= 1e-2) {
        return Err(String::from("--epsilon must be in (0, 1e-2]"));
    }
    if !(shared.min_arc > 0.0 && shared.min_arc < 2.0 * std::f64::consts::FRAC_PI_3) {
        return Err(String::from("--min-arc must be in (0, 2*pi/3)"));
    }
    if shared.jobs == 0 {
        return Err(String::from("--jobs must be at least 1"));
    }
    Ok(RunOptions {
        trials,
        seed: shared.seed,
        epsilon: shared.epsilon,
        min_arc: shared.min_arc,
        allow_obtuse: shared.allow_obtuse,
        jobs: shared.jobs,
        fixed,
    })
}

struct LoadedScript {
    name: String,
    script: Script,
}

fn load_files(files: &[PathBuf]) -> Result<Vec<LoadedScript>, i32> {
    let mut scripts = Vec::with_capacity(files.len());
    for path in files {
        let name = path.display().to_string();
        let source = match fs::read_to_string(path) {
            Ok(source) => source,
            Err(err) => {
                eprintln!("geocheck: {}: {}", name, err);
                return Err(EXIT_CONFIG_ERROR);
            }
        };
        match dsl::parse(&source) {
            Ok(script) => scripts.push(LoadedScript { name, script }),
            Err(diag) => {
                eprintln!("{}", dsl::format_diagnostic(&name, &diag));
                return Err(EXIT_PARSE_ERROR);
            }
        }
    }
    Ok(scripts)
}

fn execute(scripts: &[LoadedScript], shared: &SharedArgs, opts: &RunOptions) -> i32 {
    let mut reports: Vec<(&str, TrialReport)> = Vec::with_capacity(scripts.len());
    for (i, loaded) in scripts.iter().enumerate() {
        match runner::run_script(&loaded.script, opts) {
            Ok(report) => {
                let ctx = ReportContext {
                    script_name: &loaded.name,
                    seed: opts.seed,
                    epsilon: opts.epsilon,
                };
                match shared.format {
                    OutputFormat::Json => println!("{}", report::render_json(&ctx, &report)),
                    OutputFormat::Text => {
                        if i > 0 {
                            println!();
                        }
                        print!("{}", report::render_text(&ctx, &report));
                    }
                }
                reports.push((&loaded.name, report));
            }
            Err(EngineError::Exhausted(err)) => {
                eprintln!("geocheck: {}: {}", loaded.name, err);
                return EXIT_DEGENERATE;
            }
            Err(EngineError::Eval(err)) => {
                eprintln!("geocheck: {}: {}", loaded.name, err);
                return EXIT_PARSE_ERROR;
            }
        }
    }

    if shared.format == OutputFormat::Text && reports.len() > 1 {
        println!();
        println!("summary:");
        for (name, report) in &reports {
            println!(
                "  {:<28} {:<5} failures {:>6}  degenerate trials {:>6}",
                name,
                match report.verdict {
                    Verdict::Pass => "pass",
                    Verdict::Fail => "FAIL",
                },
                report.total_failures(),
                report.degenerate_rejections,
            );
        }
    }

    let too_degenerate = reports
        .iter()
        .any(|(_, r)| r.degenerate_fraction() > MAX_DEGENERATE_FRACTION);
    let any_failed = reports.iter().any(|(_, r)| r.verdict == Verdict::Fail);
    if too_degenerate {
        EXIT_DEGENERATE
    } else if any_failed {
        EXIT_VERDICT_FAILURE
    } else {
        EXIT_PASS
    }
}

fn cmd_run(args: RunArgs) -> i32 {
    let opts = match build_options(&args.shared) {
        Ok(opts) => opts,
        Err(msg) => {
            eprintln!("geocheck: {}", msg);
            return EXIT_CONFIG_ERROR;
        }
    };
    let scripts = match load_files(&args.files) {
        Ok(scripts) => scripts,
        Err(code) => return code,
    };
    execute(&scripts, &args.shared, &opts)
}

fn cmd_corpus(args: CorpusArgs) -> i32 {
    let opts = match build_options(&args.shared) {
        Ok(opts) => opts,
        Err(msg) => {
            eprintln!("geocheck: {}", msg);
            return EXIT_CONFIG_ERROR;
        }
    };
    let scripts: Vec<LoadedScript> = corpus::CORPUS
        .iter()
        .map(|(name, source)| LoadedScript {
            name: (*name).to_string(),
            script: dsl::parse(source).expect("bundled corpus parses"),
        })
        .collect();
    execute(&scripts, &args.shared, &opts)
}

fn cmd_parse(args: ParseArgs) -> i32 {
    let mut io_failed = false;
    let mut parse_failed = false;
    for path in &args.files {
        let name = path.display().to_string();
        match fs::read_to_string(path) {
            Err(err) => {
                eprintln!("geocheck: {}: {}", name, err);
                io_failed = true;
            }
            Ok(source) => match dsl::parse(&source) {
                Ok(_) => println!("{}: ok", name),
                Err(diag) => {
                    eprintln!("{}", dsl::format_diagnostic(&name, &diag));
                    parse_failed = true;
                }
            },
        }
    }
    if io_failed {
        EXIT_CONFIG_ERROR
    } else if parse_failed {
        EXIT_PARSE_ERROR
    } else {
        EXIT_PASS
    }
}
