//! Command-line interface: subcommands, output formats, worker
//! configuration, and the persistent count cache.
//!
//! Exit codes follow one convention everywhere: 0 for success; 1 for
//! malformed input or a violated precondition (bad flags, unparseable gap
//! lists, filters with unknown keys, oracle requests past the cap, a
//! corrupt cache file); 2 for semantic failure (a gap list that fails
//! validation, or a selftest that found a broken invariant).

use std::env;
use std::fmt::Display;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind as ClapErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analysis::{classify, jenkins_forced_gap, point_count_bounds, Classification};
use crate::cache::{load_counts, save_counts, CacheError};
use crate::enumerate::{
    brute_force_count, tree_count, tree_walk, EnumerationError, GenusCount, SequenceFilter,
    DEFAULT_BRUTE_FORCE_LIMIT,
};
use crate::ladder::DimensionLadder;
use crate::record::SequenceRecord;
use crate::selftest::{run_selftest, SelftestConfig};
use crate::sequence::{validate, GapSequence, ValidationError};

/// Consulted for the worker count when --workers is absent; the flag wins.
pub const WORKERS_ENV_VAR: &str = "WEIERGAP_WORKERS";

pub const EXIT_OK: i32 = 0;
/// Malformed input or violated precondition.
pub const EXIT_INPUT: i32 = 1;
/// Semantically invalid sequence, or a failed selftest.
pub const EXIT_INVALID: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// One JSON object per line
    Jsonl,
    /// Comma-separated rows with a header
    Csv,
    /// Human-oriented text
    Plain,
}

/// Fully resolved run configuration shared by all subcommands.
#[derive(Clone, Debug)]
pub struct CliConfig {
    pub workers: usize,
    pub brute_force_limit: u32,
    pub format: OutputFormat,
    pub cache_path: Option<PathBuf>,
}

#[derive(Parser)]
#[command(
    name = "weiergap",
    version,
    about = "Enumerate, count, validate, and analyze Weierstrass gap sequences"
)]
struct Cli {
    /// Worker threads for counting (default: WEIERGAP_WORKERS, then the machine parallelism)
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    workers: Option<u32>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Jsonl)]
    format: OutputFormat,

    /// Genus cap for the exhaustive oracle
    #[arg(long, global = true, value_name = "G", default_value_t = DEFAULT_BRUTE_FORCE_LIMIT)]
    brute_force_limit: u32,

    /// CSV file used to cache genus counts across runs
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the gap sequences of one genus
    Count {
        #[arg(long)]
        genus: u32,
        /// Use the exhaustive oracle instead of the tree search
        #[arg(long)]
        oracle: bool,
    },
    /// Stream every gap sequence of a genus, one record per line
    Enumerate {
        #[arg(long)]
        genus: u32,
        /// Keep only matching sequences; keys: firstNonGap, weight, classification
        #[arg(long, value_name = "KEY=VALUE")]
        filter: Option<String>,
    },
    /// Check whether a gap list is valid for a genus
    Validate {
        /// Comma-separated ascending gap list, e.g. 1,3,5 (empty for genus 0)
        #[arg(long, default_value = "", value_name = "LIST")]
        gaps: String,
        #[arg(long)]
        genus: u32,
    },
    /// Weight and classification of one gap sequence
    Weight {
        #[arg(long, default_value = "", value_name = "LIST")]
        gaps: String,
        #[arg(long)]
        genus: u32,
    },
    /// Dimension ladder h0/i of one gap sequence, with the law report
    Ladder {
        #[arg(long, default_value = "", value_name = "LIST")]
        gaps: String,
        #[arg(long)]
        genus: u32,
    },
    /// Point-count bounds and the total weight budget for a genus
    Bounds {
        #[arg(long)]
        genus: u32,
    },
    /// Forced-gap criterion for coprime pole orders h and k
    Jenkins {
        /// First non-gap under consideration
        #[arg(long)]
        h: u32,
        /// Candidate gap order
        #[arg(long)]
        k: u32,
        #[arg(long)]
        genus: u32,
    },
    /// Run the built-in verification suite
    Selftest {
        /// Exhaustive checks cover every genus up to this
        #[arg(long, default_value_t = 8)]
        max_genus: u32,
    },
}

/// Entry point for the binary; returns the process exit code.
pub fn main() -> i32 {
    let args: Vec<String> = env::args().collect();
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    run(&args, &mut out, &mut err)
}

/// Parse and execute one invocation. Split out from [`main`] so tests can
/// drive the full command surface against in-memory writers.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_INPUT
                }
            };
        }
    };

    let workers = match resolve_workers(cli.workers) {
        Ok(w) => w,
        Err(msg) => return input_error(err, msg),
    };
    let config = CliConfig {
        workers,
        brute_force_limit: cli.brute_force_limit,
        format: cli.format,
        cache_path: cli.cache,
    };

    match cli.command {
        Command::Count { genus, oracle } => cmd_count(genus, oracle, &config, out, err),
        Command::Enumerate { genus, filter } => {
            cmd_enumerate(genus, filter.as_deref(), &config, out, err)
        }
        Command::Validate { gaps, genus } => cmd_validate(&gaps, genus, out, err),
        Command::Weight { gaps, genus } => cmd_weight(&gaps, genus, &config, out, err),
        Command::Ladder { gaps, genus } => cmd_ladder(&gaps, genus, &config, out, err),
        Command::Bounds { genus } => cmd_bounds(genus, &config, out, err),
        Command::Jenkins { h, k, genus } => cmd_jenkins(h, k, genus, out, err),
        Command::Selftest { max_genus } => cmd_selftest(max_genus, &config, out),
    }
}

/// Flag, then environment, then machine parallelism.
fn resolve_workers(flag: Option<u32>) -> Result<usize, String> {
    if let Some(w) = flag {
        return Ok(w as usize);
    }
    match env::var(WORKERS_ENV_VAR) {
        Ok(raw) => raw
            .parse::<usize>()
            .ok()
            .filter(|&w| w >= 1)
            .ok_or_else(|| format!("{WORKERS_ENV_VAR} must be a positive integer, got {raw:?}")),
        Err(env::VarError::NotPresent) => Ok(std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)),
        Err(env::VarError::NotUnicode(_)) => Err(format!("{WORKERS_ENV_VAR} is not valid UTF-8")),
    }
}

fn input_error(err: &mut dyn Write, message: impl Display) -> i32 {
    let _ = writeln!(err, "error: {message}");
    EXIT_INPUT
}

fn invalid_sequence(err: &mut dyn Write, e: &ValidationError) -> i32 {
    let _ = writeln!(err, "error: invalid gap sequence: {}: {e}", e.kind());
    EXIT_INVALID
}

/// Comma-separated unsigned integers; empty or whitespace-only means the
/// empty list (the genus-0 sequence).
fn parse_gap_list(raw: &str) -> Result<Vec<u32>, String> {
    let trimmed = raw.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|piece| {
            let piece = piece.trim();
            piece
                .parse::<u32>()
                .map_err(|_| format!("gap list entry {piece:?} is not an unsigned integer"))
        })
        .collect()
}

fn parse_and_validate(gaps_raw: &str, genus: u32, err: &mut dyn Write) -> Result<GapSequence, i32> {
    let gaps = parse_gap_list(gaps_raw).map_err(|msg| input_error(err, msg))?;
    validate(genus, &gaps).map_err(|e| invalid_sequence(err, &e))
}

fn cmd_count(
    genus: u32,
    oracle: bool,
    config: &CliConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let count = if oracle {
        match brute_force_count(genus, config.brute_force_limit) {
            Ok(c) => c,
            Err(e) => return input_error(err, e),
        }
    } else if let Some(path) = &config.cache_path {
        match cached_count(genus, path, config) {
            Ok(c) => c,
            Err(e) => return input_error(err, e),
        }
    } else {
        tree_count(genus, config.workers)
    };
    match config.format {
        OutputFormat::Jsonl => {
            let _ = writeln!(out, "{{\"genus\":{genus},\"count\":{count}}}");
        }
        OutputFormat::Csv => {
            let _ = writeln!(out, "{genus},{count}");
        }
        OutputFormat::Plain => {
            let _ = writeln!(out, "{count}");
        }
    }
    EXIT_OK
}

/// Serve from the cache when the row exists; otherwise compute the count,
/// then merge its row in genus order and rewrite the file.
fn cached_count(genus: u32, path: &Path, config: &CliConfig) -> Result<u64, CacheError> {
    let mut rows = if path.exists() {
        load_counts(path)?
    } else {
        Vec::new()
    };
    if let Some(row) = rows.iter().find(|r| r.genus == genus) {
        return Ok(row.count);
    }
    let count = tree_count(genus, config.workers);
    rows.push(GenusCount { genus, count });
    rows.sort_by_key(|r| r.genus);
    save_counts(path, &rows)?;
    Ok(count)
}

fn cmd_enumerate(
    genus: u32,
    filter: Option<&str>,
    config: &CliConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let filter = match filter {
        Some(raw) => match SequenceFilter::parse(raw) {
            Ok(f) => Some(f),
            Err(e) => return input_error(err, e),
        },
        None => None,
    };
    if filter.is_some() && genus < 1 {
        return input_error(err, EnumerationError::FilterRequiresPositiveGenus);
    }
    let mut out = BufWriter::new(out);
    if config.format == OutputFormat::Csv {
        let _ = writeln!(out, "{}", SequenceRecord::csv_header());
    }
    for seq in tree_walk(genus) {
        if let Some(f) = &filter {
            if !f.matches(&seq) {
                continue;
            }
        }
        let record = SequenceRecord::from_sequence(&seq);
        let line = match config.format {
            OutputFormat::Jsonl => record.json_line(),
            OutputFormat::Csv => record.csv_row(),
            OutputFormat::Plain => record.plain_line(),
        };
        if writeln!(out, "{line}").is_err() {
            break;
        }
    }
    let _ = out.flush();
    EXIT_OK
}

fn cmd_validate(gaps_raw: &str, genus: u32, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let gaps = match parse_gap_list(gaps_raw) {
        Ok(g) => g,
        Err(msg) => return input_error(err, msg),
    };
    match validate(genus, &gaps) {
        Ok(_) => {
            let _ = writeln!(out, "valid");
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(out, "invalid: {}: {e}", e.kind());
            EXIT_INVALID
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct WeightLine {
    weight: u64,
    is_weierstrass: bool,
    classification: Classification,
    first_non_gap: Option<u32>,
    also_exceptional: bool,
}

fn cmd_weight(
    gaps_raw: &str,
    genus: u32,
    config: &CliConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let seq = match parse_and_validate(gaps_raw, genus, err) {
        Ok(seq) => seq,
        Err(code) => return code,
    };
    let report = classify(&seq);
    let line = WeightLine {
        weight: report.weight,
        is_weierstrass: report.is_weierstrass,
        classification: report.classification,
        first_non_gap: report.first_non_gap,
        also_exceptional: report.also_exceptional,
    };
    match config.format {
        OutputFormat::Jsonl => {
            let _ = writeln!(out, "{}", to_json(&line));
        }
        OutputFormat::Csv => {
            let _ = writeln!(
                out,
                "weight,isWeierstrass,classification,firstNonGap,alsoExceptional"
            );
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                line.weight,
                line.is_weierstrass,
                line.classification,
                line.first_non_gap
                    .map(|h| h.to_string())
                    .unwrap_or_default(),
                line.also_exceptional
            );
        }
        OutputFormat::Plain => {
            let _ = writeln!(
                out,
                "weight={} isWeierstrass={} classification={} firstNonGap={} alsoExceptional={}",
                line.weight,
                line.is_weierstrass,
                line.classification,
                line.first_non_gap
                    .map(|h| h.to_string())
                    .unwrap_or_else(|| "-".to_string()),
                line.also_exceptional
            );
        }
    }
    EXIT_OK
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct LawLine {
    law: &'static str,
    pass: bool,
    first_offending_index: Option<usize>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct LadderLine<'a> {
    genus: u32,
    h0: &'a [i64],
    i: &'a [i64],
    laws: Vec<LawLine>,
}

fn cmd_ladder(
    gaps_raw: &str,
    genus: u32,
    config: &CliConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let seq = match parse_and_validate(gaps_raw, genus, err) {
        Ok(seq) => seq,
        Err(code) => return code,
    };
    let ladder = DimensionLadder::from_gaps(&seq);
    let report = ladder.verify();
    let laws: Vec<LawLine> = report
        .checks
        .iter()
        .map(|c| LawLine {
            law: c.law.label(),
            pass: c.pass,
            first_offending_index: c.first_offending_index,
        })
        .collect();
    match config.format {
        OutputFormat::Jsonl => {
            let line = LadderLine {
                genus: ladder.genus(),
                h0: ladder.h0(),
                i: ladder.i(),
                laws,
            };
            let _ = writeln!(out, "{}", to_json(&line));
        }
        OutputFormat::Csv => {
            let _ = writeln!(out, "h0,{}", join_csv(ladder.h0()));
            let _ = writeln!(out, "i,{}", join_csv(ladder.i()));
            for law in &laws {
                let index = law
                    .first_offending_index
                    .map(|n| n.to_string())
                    .unwrap_or_default();
                let verdict = if law.pass { "pass" } else { "fail" };
                let _ = writeln!(out, "law,{},{verdict},{index}", law.law);
            }
        }
        OutputFormat::Plain => {
            let _ = writeln!(out, "h0: {}", join_spaced(ladder.h0()));
            let _ = writeln!(out, "i: {}", join_spaced(ladder.i()));
            for law in &laws {
                if law.pass {
                    let _ = writeln!(out, "law {}: pass", law.law);
                } else if let Some(n) = law.first_offending_index {
                    let _ = writeln!(out, "law {}: FAIL at index {n}", law.law);
                } else {
                    let _ = writeln!(out, "law {}: FAIL", law.law);
                }
            }
        }
    }
    EXIT_OK
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct BoundsLine {
    genus: u32,
    lower: u64,
    upper: u64,
    total_weight: u64,
}

fn cmd_bounds(genus: u32, config: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let bounds = match point_count_bounds(genus) {
        Ok(b) => b,
        Err(e) => return input_error(err, e),
    };
    let line = BoundsLine {
        genus: bounds.genus,
        lower: bounds.lower,
        upper: bounds.upper,
        total_weight: bounds.total_weight,
    };
    match config.format {
        OutputFormat::Jsonl => {
            let _ = writeln!(out, "{}", to_json(&line));
        }
        OutputFormat::Csv => {
            let _ = writeln!(out, "genus,lower,upper,totalWeight");
            let _ = writeln!(
                out,
                "{},{},{},{}",
                line.genus, line.lower, line.upper, line.total_weight
            );
        }
        OutputFormat::Plain => {
            let _ = writeln!(
                out,
                "genus={} lower={} upper={} totalWeight={}",
                line.genus, line.lower, line.upper, line.total_weight
            );
        }
    }
    EXIT_OK
}

fn cmd_jenkins(h: u32, k: u32, genus: u32, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match jenkins_forced_gap(h, k, genus) {
        Ok(true) => {
            let _ = writeln!(out, "forced-gap");
            EXIT_OK
        }
        Ok(false) => {
            let _ = writeln!(out, "not-forced");
            EXIT_OK
        }
        Err(e) => input_error(err, e),
    }
}

fn cmd_selftest(max_genus: u32, config: &CliConfig, out: &mut dyn Write) -> i32 {
    let st = SelftestConfig {
        max_genus,
        brute_force_limit: config.brute_force_limit,
        workers: config.workers,
    };
    if run_selftest(&st, out) {
        EXIT_OK
    } else {
        EXIT_INVALID
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report serialization cannot fail")
}

fn join_csv(values: &[i64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn join_spaced(values: &[i64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
