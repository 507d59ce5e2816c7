//! Plot-ready CSV tables, one file per figure, named `<stage>_<name>.csv`.

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::report::round_significant;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Num(f64),
    Text(String),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            // same rounding as the report; non-finite values are left blank
            Cell::Num(x) => round_significant(*x).map_or_else(String::new, |v| serde_json::to_string(&v).unwrap()),
            Cell::Text(s) => s.clone(),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<usize> for Cell {
    fn from(i: usize) -> Self {
        Cell::Int(i as i64)
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotTable {
    pub stage: &'static str,
    pub name: &'static str,
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl PlotTable {
    pub fn new(stage: &'static str, name: &'static str, header: &[&str]) -> Self {
        Self { stage, name, header: header.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn file_name(&self) -> String {
        format!("{}_{}.csv", self.stage, self.name)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Invalid(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }

    pub fn write(&self, dir: &Path) -> Result<PathBuf> {
        let path = dir.join(self.file_name());
        std::fs::write(&path, self.to_csv()?).map_err(|e| Error::io(&path, e))?;
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_rounded_numbers_and_blanks() {
        let mut t = PlotTable::new("arma", "fit", &["t", "actual", "predicted"]);
        t.push(vec![0usize.into(), 500.0.into(), f64::NAN.into()]);
        t.push(vec![1usize.into(), 600.0.into(), (2.0f64 / 3.0).into()]);
        assert_eq!(t.file_name(), "arma_fit.csv");
        assert_eq!(t.to_csv().unwrap(), "t,actual,predicted\n0,500.0,\n1,600.0,0.666666666667\n");
    }
}
