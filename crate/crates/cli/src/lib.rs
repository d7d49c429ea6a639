//! The `chword` command line: argument definitions and command execution.
//!
//! Commands produce their whole output as a string together with an exit
//! code, so the binary only has to print or write it.

pub mod render;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use christoffel_words::balance::{
    enumerate_balanced, in_digital_bar, is_balanced, is_circularly_balanced, is_prefix_normal, unbalance_witness,
    ImbalanceWitness,
};
use christoffel_words::christoffel::{
    central_word, christoffel_matrix, is_central, lower_christoffel, upper_christoffel,
};
use christoffel_words::counting::{brute_count_balanced_capped, count_balanced_report, DEFAULT_BRUTE_CAP};
use christoffel_words::farey::{enumerate_plc, is_plc, plc_farey_bijection};
use christoffel_words::forbidden::{enumerate_mab, enumerate_mf, is_minimal_forbidden};
use christoffel_words::{BinaryWord, WordError};

use render::{RenderFormat, RenderSpec};

/// Largest `a + b` accepted by `gen`.
pub const GEN_LIMIT: u64 = 1_000_000;
/// Largest `a + b` or `n` accepted by `enum` without `--allow-large`.
pub const ENUM_CAP: u64 = 26;

#[derive(Debug, Parser)]
#[command(
    name = "chword",
    version,
    about = "Christoffel words, balanced words and their relatives"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the output to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a Christoffel word, central word or Christoffel matrix.
    Gen { kind: GenKind, a: u64, b: u64 },
    /// Test a property of a word: exit 0 if it holds, 1 if not.
    Check {
        property: Property,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Count balanced words with `a` zeros and `b` ones.
    Count {
        a: u64,
        b: u64,
        /// Print every term of the count as JSON.
        #[arg(long)]
        audit: bool,
        /// Also count by brute force (a + b <= 20) and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// List words or fractions, one per line.
    Enum {
        #[command(subcommand)]
        target: EnumTarget,
        /// Lift the size cap of 26.
        #[arg(long, global = true)]
        allow_large: bool,
    },
    /// Draw the lattice path of a word.
    Render {
        word: String,
        /// Draw the lower and upper Christoffel paths with the same endpoints.
        #[arg(long)]
        bar: bool,
        /// Draw the segment from the origin to the endpoint.
        #[arg(long)]
        segment: bool,
        #[arg(long, value_enum, default_value = "ascii")]
        format: RenderFormat,
        /// SVG pixels per lattice unit.
        #[arg(long, default_value_t = 24)]
        cell_size: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Lower,
    Upper,
    Central,
    Matrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Balanced,
    Circular,
    PrefixNormal,
    Plc,
    Central,
    Lyndon,
    Mf,
    InBar,
}

#[derive(Debug, Subcommand)]
pub enum EnumTarget {
    /// Balanced words with Parikh vector (a, b).
    Balanced { a: u64, b: u64 },
    /// Prefixes of lower Christoffel words of length n.
    Plc { n: u64 },
    /// Minimal forbidden words of the balanced language of length n.
    Mf { n: u64 },
    /// Minimal almost balanced words of length at most n.
    Mab { n: u64 },
    /// PLC words of length n paired with the Farey sequence of order n.
    Farey { n: u64 },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("{what} is {size}, above the cap of {cap}{hint}")]
    Cap {
        what: &'static str,
        size: u64,
        cap: u64,
        hint: &'static str,
    },
    #[error("a + b = {size} exceeds the limit of {limit}")]
    TooLarge { size: u64, limit: u64 },
    #[error("cannot serialize output: {0}")]
    Json(#[from] serde_json::Error),
}

/// Command output and exit code (0 holds, 1 does not hold).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

fn json_line<T: Serialize + ?Sized>(value: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn parse_word(s: &str) -> Result<BinaryWord, CliError> {
    Ok(s.parse::<BinaryWord>()?)
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Gen { kind, a, b } => gen(*kind, *a, *b, cli.json),
        Command::Check { property, word } => check(*property, word, cli.json),
        Command::Count { a, b, audit, oracle } => count(*a, *b, *audit, *oracle, cli.json),
        Command::Enum { target, allow_large } => enumerate(target, *allow_large, cli.json),
        Command::Render {
            word,
            bar,
            segment,
            format,
            cell_size,
        } => {
            let spec = RenderSpec {
                word: parse_word(word)?,
                show_bar: *bar,
                show_segment: *segment,
                format: *format,
                cell_size: *cell_size,
            };
            Ok(Outcome::ok(render::render(&spec)?))
        }
    }
}

#[derive(Serialize)]
struct GeneratedWord {
    a: u64,
    b: u64,
    word: BinaryWord,
}

fn gen(kind: GenKind, a: u64, b: u64, json: bool) -> Result<Outcome, CliError> {
    let size = a.checked_add(b).ok_or(WordError::Overflow { a, b })?;
    if size > GEN_LIMIT {
        return Err(CliError::TooLarge { size, limit: GEN_LIMIT });
    }
    let word = match kind {
        GenKind::Lower => lower_christoffel(a, b)?,
        GenKind::Upper => upper_christoffel(a, b)?,
        GenKind::Central => central_word(a, b)?,
        GenKind::Matrix => {
            let m = christoffel_matrix(a, b)?;
            return Ok(Outcome::ok(if json { json_line(&m)? } else { m.to_text() }));
        }
    };
    Ok(Outcome::ok(if json {
        json_line(&GeneratedWord { a, b, word })?
    } else {
        format!("{word}\n")
    }))
}

#[derive(Serialize)]
struct CheckReport {
    property: Property,
    word: BinaryWord,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<ImbalanceWitness>,
}

fn check(property: Property, word: &str, json: bool) -> Result<Outcome, CliError> {
    let w = parse_word(word)?;
    let mut witness = None;
    let holds = match property {
        Property::Balanced => {
            witness = unbalance_witness(&w);
            let holds = is_balanced(&w);
            if holds != witness.is_none() {
                return Err(WordError::Internal(format!("balance tests disagree on {w}")).into());
            }
            holds
        }
        Property::Circular => is_circularly_balanced(&w)?,
        Property::PrefixNormal => is_prefix_normal(&w),
        Property::Plc => is_plc(&w)?,
        Property::Central => is_central(&w),
        Property::Lyndon => w.is_lyndon()?,
        Property::Mf => is_minimal_forbidden(&w),
        Property::InBar => in_digital_bar(&w)?,
    };
    let code = if holds { 0 } else { 1 };
    let text = if json {
        json_line(&CheckReport {
            property,
            word: w,
            holds,
            witness,
        })?
    } else {
        let mut text = format!("{holds}\n");
        if let Some(wit) = witness {
            let _ = writeln!(text, "witness: v={} (0v0 at {}, 1v1 at {})", wit.v, wit.pos0, wit.pos1);
        }
        text
    };
    Ok(Outcome { text, code })
}

#[derive(Serialize)]
struct AuditReport {
    #[serde(flatten)]
    report: christoffel_words::counting::CountReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<u64>,
}

#[derive(Serialize)]
struct CountSummary {
    a: u64,
    b: u64,
    total: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<u64>,
}

fn count(a: u64, b: u64, audit: bool, oracle: bool, json: bool) -> Result<Outcome, CliError> {
    let oracle_total = if oracle {
        let size = a.checked_add(b).ok_or(WordError::Overflow { a, b })?;
        if size > DEFAULT_BRUTE_CAP {
            return Err(CliError::Cap {
                what: "a + b for the oracle",
                size,
                cap: DEFAULT_BRUTE_CAP,
                hint: "",
            });
        }
        Some(brute_count_balanced_capped(a, b, DEFAULT_BRUTE_CAP)?)
    } else {
        None
    };
    let report = count_balanced_report(a, b)?;
    let total = report.total;
    let text = if audit {
        json_line(&AuditReport {
            report,
            oracle: oracle_total,
        })?
    } else if json {
        json_line(&CountSummary {
            a,
            b,
            total,
            oracle: oracle_total,
        })?
    } else {
        match oracle_total {
            Some(o) if o == total => format!("{total}\noracle: {o} (agrees)\n"),
            Some(o) => format!("{total}\noracle: {o} (DISAGREES)\n"),
            None => format!("{total}\n"),
        }
    };
    let code = match oracle_total {
        Some(o) if o != total => 1,
        _ => 0,
    };
    Ok(Outcome { text, code })
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let mut out = String::new();
    for item in items {
        out.push_str(&item.to_string());
        out.push('\n');
    }
    out
}

fn enumerate(target: &EnumTarget, allow_large: bool, json: bool) -> Result<Outcome, CliError> {
    let (what, size) = match target {
        EnumTarget::Balanced { a, b } => ("a + b", a.checked_add(*b).ok_or(WordError::Overflow { a: *a, b: *b })?),
        EnumTarget::Plc { n } | EnumTarget::Mf { n } | EnumTarget::Mab { n } | EnumTarget::Farey { n } => ("n", *n),
    };
    if size > ENUM_CAP && !allow_large {
        return Err(CliError::Cap {
            what,
            size,
            cap: ENUM_CAP,
            hint: "; pass --allow-large to go ahead anyway",
        });
    }
    let text = match target {
        EnumTarget::Balanced { a, b } => {
            let words = enumerate_balanced(*a, *b)?;
            if json {
                json_line(&words)?
            } else {
                lines(words)
            }
        }
        EnumTarget::Plc { n } => {
            let entries = enumerate_plc(*n as usize)?;
            if json {
                json_line(&entries)?
            } else {
                lines(entries.into_iter().map(|e| e.word))
            }
        }
        EnumTarget::Mf { n } => {
            let words = enumerate_mf(*n as usize)?;
            if json {
                json_line(&words)?
            } else {
                lines(words.into_iter().map(|m| m.word))
            }
        }
        EnumTarget::Mab { n } => {
            let words = enumerate_mab(*n as usize);
            if json {
                json_line(&words)?
            } else {
                lines(words)
            }
        }
        EnumTarget::Farey { n } => {
            let pairs = plc_farey_bijection(*n as usize)?;
            if json {
                json_line(&pairs.into_iter().map(|(e, _)| e).collect::<Vec<_>>())?
            } else {
                let width = *n as usize;
                let mut out = String::new();
                for (entry, fraction) in pairs {
                    let _ = writeln!(out, "{:<width$}  {fraction}", entry.word);
                }
                out
            }
        }
    };
    Ok(Outcome::ok(text))
}
