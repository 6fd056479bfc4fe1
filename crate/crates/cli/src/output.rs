//! Output documents: an ordered metadata block plus a column-oriented
//! table, rendered as CSV (`#`-prefixed metadata lines, comma separator)
//! or as a single JSON object `{meta, data}`.
//!
//! Output is deterministic: identical inputs produce byte-identical files.
//! Floats render in shortest round-trip form in both formats, so JSON
//! re-parses to bit-identical values.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;

use serde_json::{json, Map, Value};

use crate::config::Format;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Num(f64),
    Text(String),
}

impl Cell {
    pub fn bool(b: bool) -> Self {
        Cell::Text(if b { "true" } else { "false" }.into())
    }

    /// Infinite values carry no JSON representation; they render as the
    /// string `"inf"` in both formats.
    pub fn num_or_inf(x: f64) -> Self {
        if x.is_infinite() {
            Cell::Text("inf".into())
        } else {
            Cell::Num(x)
        }
    }

    fn csv(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Num(x) => format!("{x}"),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(i) => json!(i),
            Cell::Num(x) => json!(x),
            Cell::Text(s) => json!(s),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Document {
    /// Ordered key/value metadata: parameters, truncation, tolerances, and
    /// a description of the quantity computed.
    pub meta: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Document {
    pub fn new(command: &str) -> Self {
        Self {
            meta: vec![("command".into(), command.into())],
            columns: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn meta(mut self, key: &str, value: impl std::fmt::Display) -> Self {
        self.meta.push((key.into(), value.to_string()));
        self
    }

    pub fn columns(mut self, cols: &[&str]) -> Self {
        self.columns = cols.iter().map(|c| c.to_string()).collect();
        self
    }

    pub fn column_names(mut self, cols: Vec<String>) -> Self {
        self.columns = cols;
        self
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len(), "row width mismatch");
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.meta {
            let _ = writeln!(out, "# {k} = {v}");
        }
        let _ = writeln!(out, "{}", self.columns.join(","));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut meta = Map::new();
        for (k, v) in &self.meta {
            meta.insert(k.clone(), json!(v));
        }
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| Value::Array(row.iter().map(Cell::json).collect()))
            .collect();
        let doc = json!({
            "meta": meta,
            "data": {
                "columns": self.columns,
                "rows": rows,
            }
        });
        let mut text = serde_json::to_string_pretty(&doc).expect("serializable document");
        text.push('\n');
        text
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    /// Writes to `path`, with `-` meaning stdout.
    pub fn write(&self, format: Format, path: &str) -> Result<()> {
        let text = self.render(format);
        if path == "-" {
            std::io::stdout().write_all(text.as_bytes())?;
        } else {
            fs::write(path, text)?;
        }
        Ok(())
    }
}

/// Formats an angle for metadata and column labels: multiples of π stay
/// readable (`0.25pi`), radians-only values fall back to plain numbers.
pub fn angle_label(radians: f64) -> String {
    let in_pi = radians / std::f64::consts::PI;
    let rounded = (in_pi * 1e6).round() / 1e6;
    format!("{rounded}pi")
}
