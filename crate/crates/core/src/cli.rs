//! Command-line front end, runnable in-process through [`run`].
//!
//! Exit codes: 0 success, 1 a PROBLEM verdict or benchmark mismatch, 2 usage
//! or input error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::benchmark::{builtin_cases, run_selected, sweep_oracle};
use crate::cnf::{direct_normality, full_report, Segment, Verdict};
use crate::document::{load_document, save_document, RuleBaseDocument};
use crate::kh::{kh_characteristic_points, khstab_points, select_flanking, Observation, RuleBase};
use crate::plot::render_svg;
use crate::render::{self, format_number, format_points};
use crate::FriError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROBLEM: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "fri-lab", version, about = "Fuzzy rule interpolation workbench")]
pub struct Cli {
    /// Decimal places for displayed numbers.
    #[arg(long, global = true, default_value_t = render::DEFAULT_DECIMALS)]
    pub decimals: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Kh,
    Khstab,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the builtin benchmark cases against their reference values.
    Bench {
        #[arg(long)]
        case: Option<u8>,
        /// Write per-check rows as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Also run the α-sweep oracle with this many levels.
        #[arg(long)]
        sweep: Option<usize>,
    },
    /// Interpolate the observation of a rule-base document.
    Interpolate {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Kh)]
        method: Method,
        #[arg(long)]
        sweep: Option<usize>,
        /// Distance exponent for khstab.
        #[arg(long, default_value_t = 1.0)]
        exponent: f64,
    },
    /// Load and check a rule-base document.
    Validate { file: PathBuf },
    /// Draw the flanking rules, observation and conclusion as SVG.
    Plot {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Print a builtin case as a rule-base document.
    Export {
        #[arg(long)]
        case: u8,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        Self::with_code(EXIT_OK, stdout)
    }

    fn with_code(exit_code: i32, stdout: String) -> Self {
        Self {
            exit_code,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Self {
            exit_code: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.to_string();
            if e.use_stderr() {
                CommandOutcome::usage(text)
            } else {
                CommandOutcome::ok(text)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> CommandOutcome {
    let d = cli.decimals;
    match &cli.command {
        Command::Bench { case, csv, sweep } => bench(*case, csv.as_deref(), *sweep, d),
        Command::Interpolate {
            file,
            method,
            sweep,
            exponent,
        } => interpolate(file, *method, *sweep, *exponent, d),
        Command::Validate { file } => validate(file),
        Command::Plot { file, output } => plot(file, output),
        Command::Export { case } => export(*case),
    }
}

fn bench(case: Option<u8>, csv: Option<&Path>, sweep: Option<usize>, d: u32) -> CommandOutcome {
    if let Some(id) = case {
        if !(1..=9).contains(&id) {
            return CommandOutcome::usage(format!("unknown case {id}; expected 1 to 9"));
        }
    }
    if sweep.is_some_and(|n| n < 2) {
        return CommandOutcome::usage("--sweep needs at least 2 levels");
    }
    let report = run_selected(case, sweep);
    if let Some(path) = csv {
        if let Err(e) = std::fs::write(path, render::benchmark_csv(&report)) {
            return CommandOutcome::usage(format!("cannot write {}: {e}", path.display()));
        }
    }
    let code = if report.all_passed() { EXIT_OK } else { EXIT_PROBLEM };
    CommandOutcome::with_code(code, render::benchmark_report(&report, d))
}

fn load(file: &Path) -> Result<RuleBaseDocument, CommandOutcome> {
    let bytes =
        std::fs::read(file).map_err(|e| CommandOutcome::usage(format!("cannot read {}: {e}", file.display())))?;
    load_document(&bytes).map_err(|e| CommandOutcome::usage(format!("{}: {e}", file.display())))
}

fn load_input(file: &Path) -> Result<(RuleBase, Observation), CommandOutcome> {
    let doc = load(file)?;
    let rb = doc
        .rule_base()
        .map_err(|e| CommandOutcome::usage(format!("{}: {e}", file.display())))?;
    let obs = doc
        .observation()
        .ok_or_else(|| CommandOutcome::usage(format!("{}: document has no observation", file.display())))?;
    Ok((rb, obs))
}

fn input_error(e: FriError) -> CommandOutcome {
    CommandOutcome::usage(e.to_string())
}

fn interpolate(file: &Path, method: Method, sweep: Option<usize>, exponent: f64, d: u32) -> CommandOutcome {
    let (rb, obs) = match load_input(file) {
        Ok(v) => v,
        Err(out) => return out,
    };
    let mut out = String::new();
    let problem;
    match method {
        Method::Kh => {
            let (lower, upper) = match select_flanking(&rb, &obs) {
                Ok(v) => v,
                Err(e) => return input_error(e),
            };
            if rb.dimension() == 1 {
                let report = match full_report(lower, upper, &obs) {
                    Ok(r) => r,
                    Err(e) => return input_error(e),
                };
                out.push_str(&render::normality_report(&report, d));
                problem = report.overall == Verdict::Problem || !report.points.is_monotone();
            } else {
                let y = match kh_characteristic_points(lower, upper, &obs) {
                    Ok(y) => y,
                    Err(e) => return input_error(e),
                };
                problem = direct_summary(&mut out, &y, d);
            }
            if let Some(n) = sweep {
                match sweep_oracle(lower, upper, &obs, n) {
                    Ok(s) => {
                        let _ = writeln!(
                            out,
                            "sweep: min gap {} at level {}, inf monotone {}, sup monotone {}",
                            format_number(s.min_gap, d),
                            format_number(s.gap_argmin, d),
                            s.inf_monotone,
                            s.sup_monotone
                        );
                    }
                    Err(e) => return input_error(e),
                }
            }
        }
        Method::Khstab => {
            if sweep.is_some() {
                return CommandOutcome::usage("--sweep applies to --method kh only");
            }
            let y = match khstab_points(&rb, &obs, exponent) {
                Ok(y) => y,
                Err(e) => return input_error(e),
            };
            problem = direct_summary(&mut out, &y, d);
        }
    }
    CommandOutcome::with_code(if problem { EXIT_PROBLEM } else { EXIT_OK }, out)
}

/// Points, shape and per-segment ordering verdicts; true when any segment is
/// inverted.
fn direct_summary(out: &mut String, y: &crate::kh::ConclusionPoints, d: u32) -> bool {
    let _ = writeln!(out, "points: {}", format_points(&y.0, d));
    let _ = writeln!(out, "shape: {}", render::conclusion_shape(y, d));
    let verdicts = direct_normality(y);
    for seg in Segment::ALL {
        let _ = writeln!(out, "{}: {}", seg.label(), verdicts.get(seg).label());
    }
    !verdicts.all_normal()
}

fn validate(file: &Path) -> CommandOutcome {
    let doc = match load(file) {
        Ok(doc) => doc,
        Err(out) => return out,
    };
    if let Err(e) = doc.rule_base() {
        return CommandOutcome::usage(format!("{}: {e}", file.display()));
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        "valid: format {}, {} rules, dimension {}, observation {}",
        doc.format_version,
        doc.rules.len(),
        doc.dimension,
        if doc.observation.is_some() { "present" } else { "absent" }
    );
    CommandOutcome::ok(out)
}

fn plot(file: &Path, output: &Path) -> CommandOutcome {
    let (rb, obs) = match load_input(file) {
        Ok(v) => v,
        Err(out) => return out,
    };
    let (lower, upper) = match select_flanking(&rb, &obs) {
        Ok(v) => v,
        Err(e) => return input_error(e),
    };
    let y = match kh_characteristic_points(lower, upper, &obs) {
        Ok(y) => y,
        Err(e) => return input_error(e),
    };
    let svg = render_svg(lower, upper, &obs, &y);
    if let Err(e) = std::fs::write(output, svg) {
        return CommandOutcome::usage(format!("cannot write {}: {e}", output.display()));
    }
    CommandOutcome::ok(format!("wrote {}\n", output.display()))
}

fn export(case: u8) -> CommandOutcome {
    match builtin_cases().iter().find(|c| c.id == case) {
        Some(c) => CommandOutcome::ok(save_document(&RuleBaseDocument::from_case(c))),
        None => CommandOutcome::usage(format!("unknown case {case}; expected 1 to 9")),
    }
}
