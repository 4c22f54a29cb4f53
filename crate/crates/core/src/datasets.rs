//! Bundled reference datasets and the plain-text dataset format.
//!
//! The format is one value per line; blank lines and lines starting with `#`
//! are ignored, as is anything after a `#` on a value line. Delimited files
//! (comma, tab or semicolon) are read one column at a time with
//! [`parse_column`].

use crate::error::{Error, Result};
use crate::sample::Sample;

const FATIGUE_31000PSI: &str = include_str!("../data/fatigue-31000psi.txt");
const MCCOOL_SUSTAINERS: &str = include_str!("../data/mccool-sustainers.txt");

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: [&str; 2] = ["fatigue-31000psi", "mccool-sustainers"];

pub fn builtin(name: &str) -> Result<Sample> {
    match name {
        "fatigue-31000psi" => parse(FATIGUE_31000PSI),
        "mccool-sustainers" => parse(MCCOOL_SUSTAINERS),
        other => Err(Error::Config(format!(
            "unknown built-in dataset '{other}' (expected one of: {})",
            BUILTIN_NAMES.join(", ")
        ))),
    }
}

/// 101 fatigue lives (thousands of cycles) of aluminum coupons at 31,000 psi.
pub fn fatigue_31000psi() -> Sample {
    builtin("fatigue-31000psi").expect("bundled dataset parses")
}

/// Lifetimes in hours of 10 sustainers.
pub fn mccool_sustainers() -> Sample {
    builtin("mccool-sustainers").expect("bundled dataset parses")
}

pub fn parse(text: &str) -> Result<Sample> {
    let mut values = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        values.push(parse_value(content, lineno + 1)?);
    }
    Sample::new(values)
}

fn parse_value(field: &str, line: usize) -> Result<f64> {
    let v: f64 = field
        .parse()
        .map_err(|_| Error::Config(format!("line {line}: cannot parse '{field}' as a number")))?;
    if !(v.is_finite() && v > 0.0) {
        return Err(Error::Config(format!("line {line}: value {field} is not a positive lifetime")));
    }
    Ok(v)
}

/// Reads one column of a delimited file. `column` is a 1-based index or a
/// header name; a first row whose selected field is not numeric is taken
/// as the header.
pub fn parse_column(text: &str, column: &str) -> Result<Sample> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or(Error::DegenerateSample("empty sample"))?;
    let delimiter = b"\t;,".iter().copied().find(|d| first.as_bytes().contains(d)).unwrap_or(b',');
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(delimiter)
        .has_headers(false)
        .comment(Some(b'#'))
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let index: Option<usize> = column.parse::<usize>().ok();
    if index == Some(0) {
        return Err(Error::Config("column indices start at 1".into()));
    }
    let mut selected = index.map(|i| i - 1);
    let mut values = Vec::new();
    let mut first_row = true;
    for record in reader.records() {
        let record = record.map_err(|e| Error::Config(format!("delimited input: {e}")))?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.iter().all(str::is_empty) {
            continue;
        }
        if first_row {
            first_row = false;
            let header_pos = record.iter().position(|f| f == column);
            match selected {
                Some(i) if record.get(i).is_some_and(|f| f.parse::<f64>().is_err()) => continue,
                Some(_) => {}
                None => {
                    selected = Some(header_pos.ok_or_else(|| {
                        Error::Config(format!("line {line}: no column named '{column}'"))
                    })?);
                    continue;
                }
            }
        }
        let i = selected.expect("column resolved on the first row");
        let field = record
            .get(i)
            .ok_or_else(|| Error::Config(format!("line {line}: no column {}", i + 1)))?;
        values.push(parse_value(field, line)?);
    }
    Sample::new(values)
}

/// One value per line, in shortest round-trip form.
pub fn render(sample: &Sample) -> String {
    sample.values().iter().map(|v| format!("{v}\n")).collect()
}
