//! CSV ingest and export of daily count series.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use chrono::{Days, NaiveDate};
use influx_core::TimeSeries;

use crate::error::{Error, Result};

pub const DEFAULT_COLUMN: &str = "total";
const DATE_FORMAT: &str = "%Y-%m-%d";

/// What to do when calendar days are missing.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, clap::ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GapPolicy {
    #[default]
    Reject,
    /// Fill each missing day with the rounded linear interpolant of its neighbours.
    Linear,
}

pub fn load_series(path: impl AsRef<Path>, column: &str, gaps: GapPolicy) -> Result<TimeSeries> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    read_series(file, column, gaps)
}

pub fn read_series<R: Read>(reader: R, column: &str, gaps: GapPolicy) -> Result<TimeSeries> {
    let mut csv = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = csv.headers()?.clone();
    let find = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::MissingColumn(name.to_string()))
    };
    let date_idx = find("date")?;
    let value_idx = find(column)?;

    let mut start = None;
    let mut last: Option<(NaiveDate, u64)> = None;
    let mut values = Vec::new();
    for (i, record) in csv.records().enumerate() {
        let row = i + 1;
        let record = record?;
        let raw_date = record.get(date_idx).unwrap_or("");
        let date = NaiveDate::parse_from_str(raw_date, DATE_FORMAT).map_err(|_| Error::BadDate {
            row,
            value: raw_date.to_string(),
        })?;
        let value = parse_count(record.get(value_idx).unwrap_or(""), row)?;

        if let Some((prev, prev_value)) = last {
            let step = (date - prev).num_days();
            if step < 1 {
                return Err(Error::Unordered { row, date });
            }
            if step > 1 {
                match gaps {
                    GapPolicy::Reject => return Err(Error::DateGap(prev + Days::new(1))),
                    GapPolicy::Linear => {
                        let (a, b) = (prev_value as f64, value as f64);
                        for j in 1..step {
                            let v = a + (b - a) * j as f64 / step as f64;
                            values.push(v.round() as u64);
                        }
                    }
                }
            }
        } else {
            start = Some(date);
        }
        values.push(value);
        last = Some((date, value));
    }

    let start = start.ok_or(Error::EmptySeries)?;
    TimeSeries::new(start, values, column).map_err(|source| Error::Analysis { stage: "ingest", source })
}

fn parse_count(raw: &str, row: usize) -> Result<u64> {
    let not_integer = || Error::NonInteger { row, value: raw.to_string() };
    let n: i128 = raw.parse().map_err(|_| not_integer())?;
    if n < 0 {
        return Err(Error::NegativeCount(row));
    }
    u64::try_from(n).map_err(|_| not_integer())
}

pub fn save_series(path: impl AsRef<Path>, series: &TimeSeries) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    write_series(file, series)
}

/// Writes `date,<label>` rows, one per day.
pub fn write_series<W: Write>(writer: W, series: &TimeSeries) -> Result<()> {
    let mut csv = csv::Writer::from_writer(writer);
    csv.write_record(["date", series.label()])?;
    for (i, v) in series.values().iter().enumerate() {
        csv.write_record([series.date_of(i).format(DATE_FORMAT).to_string(), v.to_string()])?;
    }
    csv.flush().map_err(|e| Error::io("<csv output>", e))
}
