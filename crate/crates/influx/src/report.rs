//! The merged JSON report: one fragment per stage, keyed by stage name.

use std::collections::BTreeMap;
use std::path::Path;

use serde_json::{Map, Value};

use crate::error::{Error, Result};

pub const SIGNIFICANT_DIGITS: usize = 12;
pub const REPORT_FILE: &str = "report.json";

/// Rounds to [`SIGNIFICANT_DIGITS`]; non-finite values have no JSON form and become `None`.
pub fn round_significant(x: f64) -> Option<f64> {
    if !x.is_finite() {
        return None;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x).parse().ok()
}

/// A JSON number rounded to 12 significant digits, or `null`.
pub fn num(x: f64) -> Value {
    round_significant(x).map_or(Value::Null, Value::from)
}

pub fn nums(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| num(x)).collect())
}

/// Applies the rounding rule to every float in a tree built elsewhere.
pub fn normalize(value: Value) -> Value {
    match value {
        Value::Number(n) if n.is_f64() => n.as_f64().map_or(Value::Null, num),
        Value::Array(items) => Value::Array(items.into_iter().map(normalize).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, normalize(v))).collect()),
        other => other,
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    fragments: BTreeMap<String, Value>,
}

impl Report {
    pub fn insert(&mut self, key: impl Into<String>, fragment: Value) {
        self.fragments.insert(key.into(), normalize(fragment));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fragments.get(key)
    }

    pub fn to_value(&self) -> Value {
        Value::Object(self.fragments.clone().into_iter().collect::<Map<_, _>>())
    }

    /// Pretty-printed with sorted keys, so equal reports are equal bytes.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.to_value()).expect("JSON values always serialize");
        text.push('\n');
        text
    }

    pub fn write(&self, dir: &Path) -> Result<()> {
        let path = dir.join(REPORT_FILE);
        std::fs::write(&path, self.to_json()).map_err(|e| Error::io(path, e))
    }
}
