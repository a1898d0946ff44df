//! JSON report assembly. Reports are deterministic for a fixed
//! (config, seed): fields are kept in sorted order and every value
//! carries an anchor token naming the quantity it instantiates, or
//! "plumbing" for bookkeeping entries.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum FieldValue {
    Number(f64),
    Flag(bool),
    Text(String),
}

#[derive(Debug, Clone, Serialize)]
pub struct Field {
    pub value: FieldValue,
    pub anchor: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub kind: String,
    pub seed: u64,
    pub fields: BTreeMap<String, Field>,
    pub tables: Vec<String>,
}

impl Report {
    pub fn new(kind: &str, seed: u64) -> Self {
        Report { kind: kind.to_string(), seed, fields: BTreeMap::new(), tables: Vec::new() }
    }

    pub fn number(&mut self, name: &str, value: f64, anchor: &str) {
        self.fields.insert(
            name.to_string(),
            Field { value: FieldValue::Number(value), anchor: anchor.to_string() },
        );
    }

    pub fn flag(&mut self, name: &str, value: bool, anchor: &str) {
        self.fields.insert(
            name.to_string(),
            Field { value: FieldValue::Flag(value), anchor: anchor.to_string() },
        );
    }

    pub fn table(&mut self, path: &Path) {
        self.tables.push(path.to_string_lossy().into_owned());
        self.tables.sort();
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn write(&self, out_dir: &Path) -> Result<PathBuf, CliError> {
        fs::create_dir_all(out_dir)?;
        let path = out_dir.join("report.json");
        fs::write(&path, self.to_json())?;
        Ok(path)
    }
}

/// Write a CSV table of f64 rows with the given header.
pub fn write_table(
    out_dir: &Path,
    name: &str,
    header: &[&str],
    rows: &[Vec<f64>],
) -> Result<PathBuf, CliError> {
    fs::create_dir_all(out_dir)?;
    let path = out_dir.join(name);
    let mut w = csv::Writer::from_path(&path).map_err(|e| CliError::config(e.to_string()))?;
    w.write_record(header).map_err(|e| CliError::numerical(e.to_string()))?;
    for row in rows {
        let rec: Vec<String> = row.iter().map(|v| format!("{v:.17e}")).collect();
        w.write_record(&rec).map_err(|e| CliError::numerical(e.to_string()))?;
    }
    w.flush()?;
    Ok(path)
}
