use std::path::PathBuf;

use chrono::NaiveDate;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("column `{0}` not found in the CSV header")]
    MissingColumn(String),
    #[error("missing day {0}")]
    DateGap(NaiveDate),
    /// 1-based data row (the header is not counted).
    #[error("negative count on data row {0}")]
    NegativeCount(usize),
    #[error("data row {row}: `{value}` is not an integer count")]
    NonInteger { row: usize, value: String },
    #[error("data row {row}: `{value}` is not an ISO-8601 date")]
    BadDate { row: usize, value: String },
    #[error("data row {row}: {date} does not follow the previous date")]
    Unordered { row: usize, date: NaiveDate },
    #[error("the series has no rows")]
    EmptySeries,
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("config {path}: {message}")]
    Config { path: PathBuf, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error("{stage}: {source}")]
    Analysis { stage: &'static str, source: influx_core::Error },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    /// Process exit code: 3 for convergence failures, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Analysis { source, .. } if source.is_convergence() => 3,
            _ => 2,
        }
    }
}
