//! Serializing count rows as CSV, JSON, or plain text.
//!
//! All formats print counts as decimal strings (they overflow u64 from
//! `n = 11` on) and trim the row after the last nonzero count; parsing pads
//! back up to the capacity bound, so a round trip reproduces the
//! [`CountVector`] exactly.

use std::io::{Read, Write};

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::counting::CountVector;
use crate::Error;

/// Output format selector shared by the CLI and the examples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    /// `n,l,count` rows with a header.
    Csv,
    /// One object: `{"n": 3, "counts": ["1", "9", "24", "18"]}`.
    Json,
    /// Human-readable lines.
    Plain,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            "plain" => Ok(OutputFormat::Plain),
            other => Err(Error::Parse(format!(
                "unknown format {other:?}, expected csv, json or plain"
            ))),
        }
    }
}

impl std::fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
            OutputFormat::Plain => "plain",
        })
    }
}

/// Number of leading entries worth printing: up to the last nonzero count,
/// but at least one.
fn printed_len(v: &CountVector) -> usize {
    v.max_lozenge_count() + 1
}

/// Writes `n,l,count` CSV rows with a header.
pub fn write_csv<W: Write>(v: &CountVector, writer: W) -> Result<(), Error> {
    let mut out = csv::Writer::from_writer(writer);
    out.write_record(["n", "l", "count"])?;
    for l in 0..printed_len(v) {
        out.write_record([v.n().to_string(), l.to_string(), v.counts()[l].to_string()])?;
    }
    out.flush()?;
    Ok(())
}

/// Parses the format written by [`write_csv`]. Rows may come in any order;
/// omitted `l` values parse as zero, and the result is padded to the
/// capacity bound.
pub fn read_csv<R: Read>(reader: R) -> Result<CountVector, Error> {
    let mut input = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let headers = input.headers()?.clone();
    if headers.iter().collect::<Vec<_>>() != ["n", "l", "count"] {
        return Err(Error::Parse(format!(
            "expected header n,l,count, found {headers:?}"
        )));
    }
    let mut n: Option<u32> = None;
    let mut entries: Vec<(usize, BigUint)> = Vec::new();
    for record in input.records() {
        let record = record?;
        if record.len() != 3 {
            return Err(Error::Parse(format!(
                "expected 3 fields per row, found {}",
                record.len()
            )));
        }
        let row_n: u32 = record[0]
            .parse()
            .map_err(|_| Error::Parse(format!("bad n field {:?}", &record[0])))?;
        match n {
            None => n = Some(row_n),
            Some(seen) if seen != row_n => {
                return Err(Error::Parse(format!(
                    "rows mix side lengths {seen} and {row_n}"
                )));
            }
            Some(_) => {}
        }
        let l: usize = record[1]
            .parse()
            .map_err(|_| Error::Parse(format!("bad l field {:?}", &record[1])))?;
        let count: BigUint = record[2]
            .parse()
            .map_err(|_| Error::Parse(format!("bad count field {:?}", &record[2])))?;
        entries.push((l, count));
    }
    let n = n.ok_or_else(|| Error::Parse("no data rows".into()))?;
    assemble(n, entries)
}

fn assemble(n: u32, entries: Vec<(usize, BigUint)>) -> Result<CountVector, Error> {
    if n < 1 {
        return Err(Error::InvalidSide(n));
    }
    let cap = CountVector::capacity_for(n);
    let mut counts = vec![BigUint::zero(); cap + 1];
    let mut seen = vec![false; cap + 1];
    for (l, count) in entries {
        if l > cap {
            if count.is_zero() {
                continue;
            }
            return Err(Error::Parse(format!(
                "nonzero count at l = {l} beyond the capacity bound {cap} for n = {n}"
            )));
        }
        if seen[l] {
            return Err(Error::Parse(format!("duplicate row for l = {l}")));
        }
        seen[l] = true;
        counts[l] = count;
    }
    CountVector::from_counts(n, counts)
}

#[derive(Serialize, Deserialize)]
struct CountRow {
    n: u32,
    counts: Vec<String>,
}

/// Writes one JSON object `{"n": ..., "counts": ["...", ...]}` with the
/// counts as decimal strings, followed by a newline.
pub fn write_json<W: Write>(v: &CountVector, mut writer: W) -> Result<(), Error> {
    let row = CountRow {
        n: v.n(),
        counts: v.counts()[..printed_len(v)]
            .iter()
            .map(|c| c.to_string())
            .collect(),
    };
    serde_json::to_writer(&mut writer, &row)?;
    writeln!(writer)?;
    Ok(())
}

/// Parses the format written by [`write_json`]. The `counts` array starts at
/// `l = 0` and the result is padded to the capacity bound.
pub fn read_json<R: Read>(reader: R) -> Result<CountVector, Error> {
    let row: CountRow = serde_json::from_reader(reader)?;
    let mut entries = Vec::with_capacity(row.counts.len());
    for (l, text) in row.counts.iter().enumerate() {
        let count: BigUint = text
            .parse()
            .map_err(|_| Error::Parse(format!("bad count {text:?} at l = {l}")))?;
        entries.push((l, count));
    }
    assemble(row.n, entries)
}

/// Writes `n=...` followed by one `l=... count=...` line per printed entry.
pub fn write_plain<W: Write>(v: &CountVector, mut writer: W) -> Result<(), Error> {
    writeln!(writer, "n={}", v.n())?;
    for l in 0..printed_len(v) {
        writeln!(writer, "l={} count={}", l, v.counts()[l])?;
    }
    Ok(())
}

/// Writes in the chosen format.
pub fn write_row<W: Write>(v: &CountVector, format: OutputFormat, writer: W) -> Result<(), Error> {
    match format {
        OutputFormat::Csv => write_csv(v, writer),
        OutputFormat::Json => write_json(v, writer),
        OutputFormat::Plain => write_plain(v, writer),
    }
}
