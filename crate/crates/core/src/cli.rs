//! Command-line front end.
//!
//! ```text
//! hwcone [--format text|json] classify TYPE RANK LABELS   e.g. classify D 3 1,0,0
//! hwcone [--format text|json] classify TYPE LABELS        e.g. classify A2xA1 1,0:1
//! hwcone [--format text|json] enumerate --max-rank R
//! hwcone [--format text|json] derive FAMILY ELL [--export FILE]
//! hwcone [--format text|json] verify FILE
//! hwcone [--format text|json] selftest [--seed N]
//! ```
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classification::{self, ClassificationReport, TABLE_VERSION};
use crate::cone::{self, ConePresentation, PresentationRecord, VerificationReport};
use crate::error::{Error, Result};
use crate::root_system::{CartanType, Family, SimpleType, Weight};
use crate::selftest;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "hwcone",
    version,
    about = "Highest-weight cones and commuting locally nilpotent derivations"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one (type, weight) pair.
    Classify {
        /// `TYPE RANK LABELS` (e.g. `D 3 1,0,0`) or `TYPE LABELS` (e.g. `A2xA1 1,0:1`).
        #[arg(num_args = 2..=3, required = true, value_names = ["TYPE", "RANK_OR_LABELS"])]
        args: Vec<String>,
    },
    /// Classify every simple type and fundamental weight up to a rank.
    Enumerate {
        #[arg(long)]
        max_rank: usize,
    },
    /// Build and verify the explicit derivations for type B or D.
    Derive {
        family: String,
        ell: usize,
        /// Also write the presentation record to this file.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Re-run the verification checks on an exported presentation.
    Verify { file: PathBuf },
    /// Run the full invariant suite.
    Selftest {
        /// Overrides `SELFTEST_SEED`.
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Parse `1,0,0` or, for products, `1,0:1` against a Cartan type.
pub fn parse_labels(t: &CartanType, s: &str) -> Result<Weight> {
    let arity_error = |got: usize| Error::LabelArity {
        cartan_type: t.to_string(),
        expected: t.rank(),
        got,
    };
    let groups: Vec<&str> = s.split(':').collect();
    if groups.len() > 1 && groups.len() != t.components().len() {
        return Err(Error::Parse(format!(
            "{} label groups for {} components of {t}",
            groups.len(),
            t.components().len()
        )));
    }
    let mut labels = Vec::new();
    for (g, group) in groups.iter().enumerate() {
        let parsed = group
            .split(',')
            .map(|x| {
                x.trim().parse::<u32>().map_err(|_| {
                    Error::Parse(format!(
                        "weight labels must be nonnegative integers, got `{}` ({} labels expected for {t})",
                        x.trim(),
                        t.rank()
                    ))
                })
            })
            .collect::<Result<Vec<u32>>>()?;
        if groups.len() > 1 && parsed.len() != t.components()[g].rank() {
            return Err(Error::LabelArity {
                cartan_type: t.components()[g].to_string(),
                expected: t.components()[g].rank(),
                got: parsed.len(),
            });
        }
        labels.extend(parsed);
    }
    if labels.len() != t.rank() {
        return Err(arity_error(labels.len()));
    }
    Ok(Weight::new(labels))
}

fn parse_type_args(args: &[String]) -> Result<(CartanType, Weight)> {
    let (t, labels) = match args {
        [family, rank, labels] => {
            let f = family
                .chars()
                .next()
                .filter(|_| family.len() == 1)
                .and_then(Family::from_letter)
                .ok_or_else(|| Error::Parse(format!("unknown family `{family}`")))?;
            let r: usize = rank
                .parse()
                .map_err(|_| Error::Parse(format!("rank must be a positive integer, got `{rank}`")))?;
            (CartanType::from(SimpleType::new(f, r)?), labels)
        }
        [t, labels] => (t.parse::<CartanType>()?, labels),
        _ => return Err(Error::Parse("expected TYPE RANK LABELS or TYPE LABELS".into())),
    };
    let w = parse_labels(&t, labels)?;
    Ok((t, w))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ConditionMismatch { .. } => EXIT_VERIFICATION,
        _ => EXIT_USAGE,
    }
}

#[derive(Serialize)]
struct EnumerationOutput<'a> {
    max_rank: usize,
    table_version: &'a str,
    reports: &'a [ClassificationReport],
}

#[derive(Serialize)]
struct DeriveOutput<'a> {
    presentation: &'a PresentationRecord,
    verification: &'a VerificationReport,
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)?)
}

fn enumeration_table(max_rank: usize, reports: &[ClassificationReport]) -> String {
    let mut s = format!(
        "{:<6} {:<6} {:>4} {:>12} {:>3} {:>3} {:>4} {:>4} {:>10} {:>4}\n",
        "type", "node", "n", "dimE", "C", "D", "sing", "ufd", "quadrics", "neg"
    );
    let yn = |b: bool| if b { "y" } else { "n" };
    for r in reports {
        let node = r.labels.iter().position(|&m| m != 0).map_or(0, |i| i + 1);
        s.push_str(&format!(
            "{:<6} {:<6} {:>4} {:>12} {:>3} {:>3} {:>4} {:>4} {:>10} {:>4}\n",
            r.cartan_type,
            node,
            r.n,
            r.dim_e.to_string(),
            yn(r.condition_c),
            yn(r.condition_d),
            yn(r.singular),
            yn(r.ufd),
            r.quadric_count.to_string(),
            yn(r.negative_answer)
        ));
    }
    let neg = reports.iter().filter(|r| r.negative_answer).count();
    s.push_str(&format!(
        "{} pairs up to rank {max_rank}, {neg} negative answers (table {TABLE_VERSION})",
        reports.len()
    ));
    s
}

fn load_presentation(path: &PathBuf) -> Result<ConePresentation> {
    let text = std::fs::read_to_string(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    // accept either a bare record or the output of `derive --format json`
    let rec = match value.get("presentation") {
        Some(inner) => serde_json::from_value::<PresentationRecord>(inner.clone())?,
        None => serde_json::from_value::<PresentationRecord>(value)?,
    };
    ConePresentation::from_record(&rec)
}

/// Execute one command, writing the report to `out` and diagnostics to `err`.
pub fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let json = cli.format == Format::Json;
    let result: Result<(String, i32)> = (|| match cli.command {
        Command::Classify { args } => {
            let (t, w) = parse_type_args(&args)?;
            let rep = classification::classify(&t, &w)?;
            let text = if json { to_json(&rep)? } else { rep.to_string() };
            Ok((text, EXIT_OK))
        }
        Command::Enumerate { max_rank } => {
            let reports = classification::enumerate(max_rank)?;
            let text = if json {
                to_json(&EnumerationOutput {
                    max_rank,
                    table_version: TABLE_VERSION,
                    reports: &reports,
                })?
            } else {
                enumeration_table(max_rank, &reports)
            };
            Ok((text, EXIT_OK))
        }
        Command::Derive { family, ell, export } => {
            let f = family
                .chars()
                .next()
                .filter(|_| family.len() == 1)
                .and_then(Family::from_letter)
                .ok_or_else(|| Error::Parse(format!("unknown family `{family}`")))?;
            let cp = cone::build_example(f, ell)?;
            let rep = cone::verify_presentation(&cp);
            let rec = cp.to_record();
            if let Some(path) = export {
                std::fs::write(path, to_json(&rec)?)?;
            }
            let text = if json {
                to_json(&DeriveOutput {
                    presentation: &rec,
                    verification: &rep,
                })?
            } else {
                format!("{cp}{rep}")
            };
            let code = if rep.all_passed { EXIT_OK } else { EXIT_VERIFICATION };
            Ok((text, code))
        }
        Command::Verify { file } => {
            let cp = load_presentation(&file)?;
            let rep = cone::verify_presentation(&cp);
            let text = if json { to_json(&rep)? } else { format!("{cp}{rep}") };
            let code = if rep.all_passed { EXIT_OK } else { EXIT_VERIFICATION };
            Ok((text, code))
        }
        Command::Selftest { seed } => {
            let seed = seed.unwrap_or_else(selftest::seed_from_env);
            let rep = selftest::run_all(seed);
            let text = if json { to_json(&rep)? } else { rep.to_string() };
            let code = if rep.passed { EXIT_OK } else { EXIT_VERIFICATION };
            Ok((text, code))
        }
    })();
    match result {
        Ok((text, code)) => {
            let _ = writeln!(out, "{text}");
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Parse `argv` (including the program name) and run, returning the exit
/// status.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => execute(cli, out, err),
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            }
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
