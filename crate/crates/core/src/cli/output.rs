use std::io::{self, Write};

use serde_json::{json, Value};

use super::{Format, SCHEMA_VERSION};

/// Flat rows for CSV output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<const N: usize>(headers: [&str; N]) -> Self {
        Table {
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<const N: usize>(&mut self, row: [String; N]) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row.into());
    }
}

/// Result of one command in all three renderings.
#[derive(Debug, Clone)]
pub struct Output {
    pub command: &'static str,
    pub params: Value,
    pub result: Value,
    pub table: Table,
    pub text: String,
    pub provenance: String,
}

impl Output {
    /// The JSON record. `serde_json` maps are ordered, so keys come out
    /// sorted.
    pub fn record(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "params": self.params,
            "result": self.result,
            "provenance": self.provenance,
        })
    }

    pub fn render(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.record())?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.table.headers)?;
                for row in &self.table.rows {
                    w.write_record(row)?;
                }
                w.flush()
            }
            Format::Text => out.write_all(self.text.as_bytes()),
        }
    }
}
