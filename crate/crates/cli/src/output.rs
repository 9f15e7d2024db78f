//! Rendering of results as JSON objects or tab-separated rows.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

/// A single TSV cell: arrays are comma-joined, `null` is empty.
pub fn cell(value: &Value) -> String {
    match value {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}

/// Writes one query result: a JSON object, or a header line and a value line.
pub fn write_result<T: Serialize, W: Write>(
    out: &mut W,
    format: Format,
    result: &T,
) -> io::Result<()> {
    let value = serde_json::to_value(result).map_err(io::Error::other)?;
    match format {
        Format::Json => writeln!(out, "{value}"),
        Format::Tsv => match &value {
            Value::Object(map) => {
                let keys: Vec<&str> = map.keys().map(String::as_str).collect();
                writeln!(out, "{}", keys.join("\t"))?;
                let cells: Vec<String> = map.values().map(cell).collect();
                writeln!(out, "{}", cells.join("\t"))
            }
            other => writeln!(out, "{}", cell(other)),
        },
    }
}
