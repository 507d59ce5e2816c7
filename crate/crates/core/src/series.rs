//! Canonical in-memory forms of a daily count series.

use alloc::string::String;
use alloc::vec::Vec;

use chrono::{Datelike, Days, NaiveDate};

use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Consecutive daily counts starting at `start_date`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimeSeries {
    start_date: NaiveDate,
    values: Vec<u64>,
    label: String,
}

impl TimeSeries {
    pub fn new(start_date: NaiveDate, values: Vec<u64>, label: impl Into<String>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(Self {
            start_date,
            values,
            label: label.into(),
        })
    }

    pub fn start_date(&self) -> NaiveDate {
        self.start_date
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Values as floating point, the form every estimator works on.
    pub fn to_f64(&self) -> Vec<f64> {
        self.values.iter().map(|&v| v as f64).collect()
    }

    pub fn date_of(&self, index: usize) -> NaiveDate {
        self.start_date + Days::new(index as u64)
    }

    /// ISO weekday (Monday = 1 … Sunday = 7) of the sample at `index`.
    pub fn weekday_of(&self, index: usize) -> u8 {
        self.date_of(index).weekday().number_from_monday() as u8
    }

    /// Weekday channel used as the exogenous ARMAX input: 1..=7, Monday = 1.
    pub fn weekday_input(&self) -> Vec<f64> {
        (0..self.len()).map(|i| self.weekday_of(i) as f64).collect()
    }
}

/// Whole weeks of a series laid out as a `rows × 7` grid.
///
/// Cells keep calendar order: row `r`, column `c` holds retained day
/// `7r + c`. `weekday_of_col1` records which weekday the first column is
/// (Monday = 1), so every column is a single weekday.
#[derive(Debug, Clone, PartialEq)]
pub struct WeeklyMatrix {
    cells: Matrix,
    weekday_of_col1: u8,
    skip_head: usize,
}

impl WeeklyMatrix {
    pub fn rows(&self) -> usize {
        self.cells.rows()
    }

    pub fn cell(&self, row: usize, col: usize) -> f64 {
        self.cells[(row, col)]
    }

    pub fn weekday_of_col1(&self) -> u8 {
        self.weekday_of_col1
    }

    /// Number of leading days of the source series that were dropped.
    pub fn skip_head(&self) -> usize {
        self.skip_head
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.cells
    }

    /// Weekday (Monday = 1) of the zero-based column `col`.
    pub fn weekday_of_col(&self, col: usize) -> u8 {
        ((self.weekday_of_col1 as usize - 1 + col) % 7 + 1) as u8
    }

    /// Row-major flattening: the retained suffix of the source series.
    pub fn flatten(&self) -> Vec<f64> {
        self.cells.as_slice().to_vec()
    }
}

/// Reshapes `s` into whole weeks after dropping `skip_head` leading days.
///
/// With `skip_head = None` the leading `len mod 7` days are dropped, so a
/// 108-day series becomes 15 × 7.
pub fn to_weekly_matrix(s: &TimeSeries, skip_head: Option<usize>) -> Result<WeeklyMatrix> {
    let skip = skip_head.unwrap_or(s.len() % 7);
    if skip >= s.len() {
        return Err(Error::TooShort {
            needed: skip + 14,
            got: s.len(),
        });
    }
    let retained = s.len() - skip;
    if retained % 7 != 0 {
        return Err(Error::NotWholeWeeks {
            remainder: retained % 7,
        });
    }
    let rows = retained / 7;
    if rows < 2 {
        return Err(Error::TooShort {
            needed: skip + 14,
            got: s.len(),
        });
    }
    let values = &s.values()[skip..];
    let cells = Matrix::from_fn(rows, 7, |r, c| values[7 * r + c] as f64);
    Ok(WeeklyMatrix {
        cells,
        weekday_of_col1: s.weekday_of(skip),
        skip_head: skip,
    })
}
