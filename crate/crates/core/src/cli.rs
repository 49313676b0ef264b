//! Command-line front end.
//!
//! Every subcommand prints plain text by default, or CSV / a single JSON
//! document with `--format`. Exit codes: 0 success, 1 verification mismatch,
//! 2 usage or input error, 3 overflow.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::Error;
use crate::forest::{roots_in_range, tree_level};
use crate::indexing::{from_oeis_index, oeis_index, rank};
use crate::oeis::{read_bfile, verify_prefix, Sequence, Verification};
use crate::primes::{
    prime_triplets_in_range, prime_triplets_in_tree, GapCensus, PrimeTripletRecord,
};
use crate::sequence::{enumerate_terms, DyckNumber};
use crate::triplets::{range_census, triplets_in_range};

/// Directory searched for b-files given by relative path.
pub const BFILE_DIR_ENV: &str = "DYCK_BFILE_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_OVERFLOW: i32 = 3;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "dyck",
    version,
    about = "Dyck numbers (OEIS A036991): ranges, triplets, trees, prime censuses"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// First N terms
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        limit: u64,
    },
    /// Size, triplet count and lone-term count per range
    Ranges {
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
    },
    /// Triplets inside a range
    Triplets {
        #[arg(long)]
        range: u32,
    },
    /// Lone terms (tree roots) of a range
    Roots {
        #[arg(long)]
        range: u32,
    },
    /// Nodes of a ternary tree at a given depth
    Tree {
        #[arg(long)]
        root: u64,
        #[arg(long)]
        depth: u32,
        /// Report the prime triplets at that depth instead of the nodes
        #[arg(long)]
        primes: bool,
    },
    /// Prime triplets of a range
    Primes {
        #[arg(long)]
        range: u32,
        /// Masked a/b/c display with twin/cousin totals
        #[arg(long)]
        census: bool,
    },
    /// A036991 index of a term (the null term 0 holds index 1)
    Rank { value: u64 },
    /// Term at an A036991 index (2 or more)
    At { index: u64 },
    /// Check a b-file against the local generator
    Verify {
        /// b-file path; relative paths fall back to $DYCK_BFILE_DIR.
        /// Defaults to bNNNNNN.txt in that directory.
        #[arg(long)]
        bfile: Option<PathBuf>,
        #[arg(long)]
        sequence: String,
    },
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let bfile_dir = std::env::var_os(BFILE_DIR_ENV).map(PathBuf::from);
    run_with_bfile_dir(args, bfile_dir.as_deref(), out, err)
}

/// [`run`] with an explicit b-file directory instead of the environment.
pub fn run_with_bfile_dir<I, T>(
    args: I,
    bfile_dir: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match execute(&cli, bfile_dir, out) {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Overflow { .. } => EXIT_OVERFLOW,
                _ => EXIT_USAGE,
            }
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli, bfile_dir: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let fmt = cli.format;
    match &cli.command {
        Command::Enumerate { limit } => {
            let terms: Vec<u64> = enumerate_terms(*limit as usize).map(u64::from).collect();
            match fmt {
                OutputFormat::Plain => writeln!(out, "{}", join(&terms, " "))?,
                OutputFormat::Csv => write_csv(
                    out,
                    &["index", "value"],
                    terms
                        .iter()
                        .enumerate()
                        .map(|(i, v)| vec![(i + 1).to_string(), v.to_string()]),
                )?,
                OutputFormat::Json => write_json(out, &json!({ "terms": terms }))?,
            }
        }
        Command::Ranges { from, to } => {
            let rows = (*from..=*to)
                .map(range_census)
                .collect::<Result<Vec<_>, _>>()?;
            match fmt {
                OutputFormat::Plain => {
                    for r in &rows {
                        writeln!(out, "{} {} {} {}", r.range, r.size, r.triplets, r.lone)?;
                    }
                }
                OutputFormat::Csv => write_csv(
                    out,
                    &["range", "size", "triplets", "lone"],
                    rows.iter().map(|r| {
                        vec![
                            r.range.to_string(),
                            r.size.to_string(),
                            r.triplets.to_string(),
                            r.lone.to_string(),
                        ]
                    }),
                )?,
                OutputFormat::Json => {
                    let rows: Vec<_> = rows
                        .iter()
                        .map(|r| json!({ "range": r.range, "size": r.size, "triplets": r.triplets, "lone": r.lone }))
                        .collect();
                    write_json(out, &json!({ "ranges": rows }))?
                }
            }
        }
        Command::Triplets { range } => {
            let ts: Vec<[u64; 3]> = triplets_in_range(*range)?
                .iter()
                .map(|t| t.values())
                .collect();
            match fmt {
                OutputFormat::Plain => {
                    for [a, b, c] in &ts {
                        writeln!(out, "{a} {b} {c}")?;
                    }
                }
                OutputFormat::Csv => write_csv(
                    out,
                    &["low", "mid", "high"],
                    ts.iter().map(|t| t.iter().map(u64::to_string).collect()),
                )?,
                OutputFormat::Json => write_json(out, &json!({ "range": range, "triplets": ts }))?,
            }
        }
        Command::Roots { range } => {
            let roots: Vec<u64> = roots_in_range(*range)?.into_iter().map(u64::from).collect();
            match fmt {
                OutputFormat::Plain => writeln!(out, "{}", join(&roots, " "))?,
                OutputFormat::Csv => {
                    write_csv(out, &["root"], roots.iter().map(|r| vec![r.to_string()]))?
                }
                OutputFormat::Json => write_json(out, &json!({ "range": range, "roots": roots }))?,
            }
        }
        Command::Tree {
            root,
            depth,
            primes,
        } => {
            let root_term = DyckNumber::new(*root)?;
            if *primes {
                let records = prime_triplets_in_tree(root_term, *depth)?;
                write_records(
                    out,
                    fmt,
                    &records,
                    true,
                    json!({ "root": root, "depth": depth }),
                )?;
            } else {
                let level: Vec<u64> = tree_level(root_term, *depth)?
                    .into_iter()
                    .map(u64::from)
                    .collect();
                match fmt {
                    OutputFormat::Plain => writeln!(out, "{}", join(&level, " "))?,
                    OutputFormat::Csv => {
                        write_csv(out, &["node"], level.iter().map(|v| vec![v.to_string()]))?
                    }
                    OutputFormat::Json => write_json(
                        out,
                        &json!({ "root": root, "depth": depth, "nodes": level }),
                    )?,
                }
            }
        }
        Command::Primes { range, census } => {
            let records = prime_triplets_in_range(*range)?;
            write_records(out, fmt, &records, *census, json!({ "range": range }))?;
        }
        Command::Rank { value } => {
            let d = DyckNumber::new(*value)?;
            write_pair(out, fmt, d, oeis_index(d))?;
        }
        Command::At { index } => {
            let d = from_oeis_index(*index)?;
            write_pair(out, fmt, d, d.get())?;
        }
        Command::Verify { bfile, sequence } => {
            let seq: Sequence = sequence.parse()?;
            let path = resolve_bfile(bfile.as_deref(), seq, bfile_dir)?;
            let file =
                File::open(&path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            let entries = read_bfile(BufReader::new(file))?;
            let report = verify_prefix(&entries, seq)?;
            write_verification(out, fmt, seq, &report)?;
            if !report.is_match() {
                return Ok(EXIT_MISMATCH);
            }
        }
    }
    Ok(EXIT_OK)
}

fn resolve_bfile(
    given: Option<&Path>,
    seq: Sequence,
    dir: Option<&Path>,
) -> Result<PathBuf, Failure> {
    match (given, dir) {
        (Some(p), Some(dir)) if p.is_relative() && !p.exists() => Ok(dir.join(p)),
        (Some(p), _) => Ok(p.to_path_buf()),
        (None, Some(dir)) => Ok(dir.join(format!("b{}.txt", &seq.name()[1..]))),
        (None, None) => Err(Failure::Io(format!(
            "no --bfile given and {BFILE_DIR_ENV} is not set"
        ))),
    }
}

fn join(values: &[u64], sep: &str) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn write_csv<I>(out: &mut dyn Write, header: &[&str], rows: I) -> Result<(), Failure>
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| Failure::Io(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

// `answer` is the side the user asked for; csv/json carry the value, its
// A036991 index and its 1-based position among members.
fn write_pair(
    out: &mut dyn Write,
    fmt: OutputFormat,
    d: DyckNumber,
    answer: u64,
) -> Result<(), Failure> {
    let (value, position) = (d.get(), rank(d));
    let index = oeis_index(d);
    match fmt {
        OutputFormat::Plain => writeln!(out, "{answer}")?,
        OutputFormat::Csv => write_csv(
            out,
            &["value", "oeis_index", "position"],
            [vec![
                value.to_string(),
                index.to_string(),
                position.to_string(),
            ]],
        )?,
        OutputFormat::Json => write_json(
            out,
            &json!({ "value": value, "oeis_index": index, "position": position }),
        )?,
    }
    Ok(())
}

fn write_records(
    out: &mut dyn Write,
    fmt: OutputFormat,
    records: &[PrimeTripletRecord],
    masked: bool,
    mut context: serde_json::Value,
) -> Result<(), Failure> {
    let census = GapCensus::tally(records);
    match fmt {
        OutputFormat::Plain if masked => {
            let shown: Vec<String> = records.iter().map(PrimeTripletRecord::masked).collect();
            writeln!(out, "{}", shown.join(", "))?;
            writeln!(
                out,
                "{} prime triplets (twin {}, cousin {})",
                records.len(),
                census.twin,
                census.cousin
            )?;
        }
        OutputFormat::Plain => {
            for r in records {
                let [a, b, c] = r.triplet.values();
                writeln!(out, "{a} {b} {c}")?;
            }
        }
        OutputFormat::Csv => write_csv(
            out,
            &[
                "low",
                "mid",
                "high",
                "low_prime",
                "mid_prime",
                "high_prime",
                "gap",
            ],
            records.iter().map(|r| {
                let v = r.triplet.values();
                let mut row: Vec<String> = v.iter().map(u64::to_string).collect();
                row.extend(r.prime_mask.iter().map(bool::to_string));
                row.push(gap_name(r).to_string());
                row
            }),
        )?,
        OutputFormat::Json => {
            let rows: Vec<_> = records
                .iter()
                .map(|r| {
                    json!({
                        "triplet": r.triplet.values(),
                        "prime_mask": r.prime_mask,
                        "gap": gap_name(r),
                    })
                })
                .collect();
            context["prime_triplets"] = json!(rows);
            context["twin"] = json!(census.twin);
            context["cousin"] = json!(census.cousin);
            write_json(out, &context)?;
        }
    }
    Ok(())
}

fn gap_name(r: &PrimeTripletRecord) -> &'static str {
    match r.gap() {
        Some(crate::primes::PrimeGap::Twin) => "twin",
        Some(crate::primes::PrimeGap::Cousin) => "cousin",
        None => "none",
    }
}

fn write_verification(
    out: &mut dyn Write,
    fmt: OutputFormat,
    seq: Sequence,
    report: &Verification,
) -> Result<(), Failure> {
    match (fmt, report) {
        (OutputFormat::Plain, Verification::Match { checked }) => {
            writeln!(out, "ok: {checked} entries match {seq}")?
        }
        (
            OutputFormat::Plain,
            Verification::Mismatch {
                index,
                expected,
                found,
            },
        ) => writeln!(
            out,
            "mismatch at index {index}: expected {expected}, found {found}"
        )?,
        (OutputFormat::Csv, _) => {
            let row = match report {
                Verification::Match { checked } => {
                    vec![
                        "match".into(),
                        checked.to_string(),
                        String::new(),
                        String::new(),
                        String::new(),
                    ]
                }
                Verification::Mismatch {
                    index,
                    expected,
                    found,
                } => vec![
                    "mismatch".into(),
                    String::new(),
                    index.to_string(),
                    expected.to_string(),
                    found.to_string(),
                ],
            };
            write_csv(
                out,
                &["status", "checked", "index", "expected", "found"],
                [row],
            )?
        }
        (OutputFormat::Json, Verification::Match { checked }) => write_json(
            out,
            &json!({ "sequence": seq.name(), "status": "match", "checked": checked }),
        )?,
        (
            OutputFormat::Json,
            Verification::Mismatch {
                index,
                expected,
                found,
            },
        ) => write_json(
            out,
            &json!({
                "sequence": seq.name(),
                "status": "mismatch",
                "index": index,
                "expected": expected,
                "found": found,
            }),
        )?,
    }
    Ok(())
}
